#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blab/broadcast.hpp"
#include "blab/certificates.hpp"
#include "blab/families.hpp"
#include "blab/graph.hpp"
#include "blab/graph6.hpp"
#include "blab/harness.hpp"
#include "blab/serialize.hpp"
#include "blab/solver.hpp"

namespace {

struct GraphInput {
  std::string family;
  std::vector<int> args;
  std::string graph6;
};

void add_graph_options(CLI::App* cmd, GraphInput& in, bool family_required) {
  auto* fam = cmd->add_option("--family", in.family, "family name (see `blab list`)");
  cmd->add_option("--args", in.args, "family arguments")->delimiter(',');
  auto* g6 = cmd->add_option("--graph6", in.graph6, "graph6 string");
  if (family_required)
    fam->required();
  else
    fam->excludes(g6);
}

blab::Graph load_graph(const GraphInput& in) {
  if (!in.graph6.empty()) return blab::parse_graph6(in.graph6);
  if (in.family.empty())
    throw std::invalid_argument("need --family or --graph6");
  return blab::generate(
      blab::FamilySpec{blab::family_from_name(in.family), in.args});
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void print_rows(const std::vector<blab::ReportRow>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.claim_id.size());
  for (const auto& r : rows) {
    std::string id = r.claim_id;
    id.resize(width + 2, ' ');
    std::string st = blab::status_name(r.status);
    st.resize(18, ' ');
    std::cout << id << st << r.elapsed_ms << " ms  " << r.computed << '\n';
  }
}

int finish_rows(const std::vector<blab::ReportRow>& rows, const std::string& csv,
                const std::string& json) {
  print_rows(rows);
  if (!csv.empty()) write_or_print(csv, blab::report_csv(rows));
  if (!json.empty()) write_or_print(json, blab::report_json(rows));
  return blab::all_pass(rows) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"broadcast domination and boundary independence workbench"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a family instance");
  GraphInput gen_in;
  add_graph_options(gen, gen_in, true);
  std::string gen_format = "g6";
  gen->add_option("--format", gen_format, "g6 or json")
      ->check(CLI::IsMember({"g6", "json"}));

  // compute
  auto* compute = app.add_subcommand("compute", "solve one parameter exactly");
  GraphInput comp_in;
  add_graph_options(compute, comp_in, false);
  std::string param;
  compute->add_option("--param", param, "parameter name, e.g. alpha_bn")->required();
  std::int64_t budget_nodes = 100'000'000;
  double budget_seconds = 0;
  int threads = 0;
  bool as_json = false;
  compute->add_option("--budget-nodes", budget_nodes, "search node budget");
  compute->add_option("--budget-seconds", budget_seconds, "wall clock budget");
  compute->add_option("--threads", threads, "worker threads (0 = auto)");
  compute->add_flag("--json", as_json, "emit the full result record");

  // verify
  auto* verify = app.add_subcommand("verify", "build and check a named certificate");
  GraphInput ver_in;
  add_graph_options(verify, ver_in, true);
  std::string cert_name;
  verify->add_option("--certificate", cert_name, "certificate name")->required();

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "run the full claim table");
  blab::HarnessOptions ropts;
  std::string rep_csv, rep_json;
  reproduce->add_option("--budget-nodes", ropts.node_budget, "per-solve node budget");
  reproduce->add_option("--anchor-budget", ropts.anchor_node_budget,
                        "node budget for the 21-vertex tree row");
  reproduce->add_option("--anchor-seconds", ropts.anchor_time_seconds,
                        "time budget for the 21-vertex tree row");
  reproduce->add_option("--seed", ropts.seed, "seed for the embedded property suite");
  reproduce->add_option("--trials", ropts.trials, "trials for the property suite");
  reproduce->add_option("--threads", ropts.threads, "worker threads (0 = auto)");
  reproduce->add_option("--csv", rep_csv, "write the CSV report here");
  reproduce->add_option("--json", rep_json, "write the JSON report here");

  // props
  auto* props = app.add_subcommand("props", "run the randomized invariant suite");
  blab::HarnessOptions popts;
  std::string prop_csv, prop_json;
  props->add_option("--budget-nodes", popts.node_budget, "per-solve node budget");
  props->add_option("--seed", popts.seed, "RNG seed");
  props->add_option("--trials", popts.trials, "trial count for the cheap rows");
  props->add_option("--threads", popts.threads, "worker threads (0 = auto)");
  props->add_option("--csv", prop_csv, "write the CSV report here");
  props->add_option("--json", prop_json, "write the JSON report here");

  // list
  auto* list = app.add_subcommand("list", "list families, parameters, certificates");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      blab::Graph g = load_graph(gen_in);
      if (gen_format == "g6")
        std::cout << blab::write_graph6(g) << '\n';
      else
        std::cout << blab::serialize_graph(g) << '\n';
      return 0;
    }
    if (compute->parsed()) {
      blab::Graph g = load_graph(comp_in);
      blab::SolveOptions so;
      so.node_budget = budget_nodes;
      so.time_budget_seconds = budget_seconds;
      so.threads = threads;
      blab::ParameterResult r =
          blab::solve(g, blab::parameter_from_name(param), so);
      if (as_json) {
        std::cout << blab::serialize_result(r) << '\n';
      } else {
        std::cout << param << " = " << r.value
                  << (r.optimal ? "" : "  (budget exhausted, best bound)") << '\n'
                  << "witness: " << blab::broadcast_by_label(r.witness, g) << '\n';
      }
      return r.optimal ? 0 : 3;
    }
    if (verify->parsed()) {
      blab::FamilySpec spec{blab::family_from_name(ver_in.family), ver_in.args};
      blab::Certificate cert = blab::build_certificate(cert_name, spec);
      std::cout << cert.name << " on " << blab::family_name(spec.kind)
                << ": weight " << cert.broadcast.weight() << ", properties";
      for (const auto& p : cert.properties) std::cout << ' ' << p;
      std::cout << "\nbroadcast: " << blab::broadcast_by_label(cert.broadcast, cert.graph)
                << '\n';
      return 0;
    }
    if (reproduce->parsed()) return finish_rows(blab::reproduce_table(ropts), rep_csv, rep_json);
    if (props->parsed()) return finish_rows(blab::property_suite(popts), prop_csv, prop_json);
    if (list->parsed()) {
      std::cout << "families:";
      for (const auto& f : blab::family_names()) std::cout << ' ' << f;
      std::cout << "\nparameters:";
      for (blab::ParameterKind k : blab::all_parameter_kinds())
        std::cout << ' ' << blab::parameter_name(k);
      std::cout << "\ncertificates:";
      for (const auto& cn : blab::certificate_names()) std::cout << ' ' << cn;
      std::cout << '\n';
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}
