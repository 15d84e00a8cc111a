#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "blab/families.hpp"
#include "blab/graph.hpp"
#include "blab/harness.hpp"

using namespace blab;

TEST_CASE("status names and pass predicate") {
  CHECK(status_name(RowStatus::pass) == "pass");
  CHECK(status_name(RowStatus::fail) == "fail");
  CHECK(status_name(RowStatus::certificate_only) == "certificate_only");
  CHECK(status_name(RowStatus::skipped_budget) == "skipped_budget");
  ReportRow ok;
  ok.status = RowStatus::pass;
  ReportRow cert;
  cert.status = RowStatus::certificate_only;
  ReportRow skipped;
  skipped.status = RowStatus::skipped_budget;
  ReportRow bad;
  bad.status = RowStatus::fail;
  CHECK(all_pass({ok, cert, skipped}));
  CHECK(!all_pass({ok, bad}));
  CHECK(all_pass({}));
}

TEST_CASE("csv escaping") {
  ReportRow r;
  r.claim_id = "x";
  r.instance = "a,b";
  r.expected = "say \"hi\"";
  r.computed = "line\nbreak";
  r.status = RowStatus::pass;
  r.elapsed_ms = 7;
  std::string csv = report_csv({r});
  CHECK(csv.find("claim_id,instance,expected,computed,status,elapsed_ms\n") == 0);
  CHECK(csv.find("\"a,b\"") != std::string::npos);
  CHECK(csv.find("\"say \"\"hi\"\"\"") != std::string::npos);
  CHECK(csv.find("\"line\nbreak\"") != std::string::npos);
  CHECK(csv.find(",pass,7\n") != std::string::npos);
}

TEST_CASE("json report shape") {
  ReportRow r;
  r.claim_id = "c00";
  r.instance = "inst";
  r.expected = "exp";
  r.computed = "got";
  r.status = RowStatus::skipped_budget;
  r.elapsed_ms = 3;
  auto parsed = nlohmann::json::parse(report_json({r}));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["claim_id"] == "c00");
  CHECK(parsed[0]["status"] == "skipped_budget");
  CHECK(parsed[0]["elapsed_ms"] == 3);
}

TEST_CASE("chain check row") {
  Graph sp = generate(FamilySpec{FamilyKind::spider, {2, 2, 2}});
  HarnessOptions opts;
  ReportRow row = inequality_chain_check(sp, "Sp(2,2,2)", opts);
  CHECK(row.claim_id == "inequality_chain");
  CHECK(row.status == RowStatus::pass);
  CHECK(row.computed.find("ok") == 0);

  // Identical inputs give identical rows apart from the wall clock.
  ReportRow again = inequality_chain_check(sp, "Sp(2,2,2)", opts);
  again.elapsed_ms = row.elapsed_ms;
  CHECK(report_csv({row}) == report_csv({again}));

  Graph big = generate(FamilySpec{FamilyKind::linked_trees_Hk, {1}});
  ReportRow skipped = inequality_chain_check(big, "H_1", opts);
  CHECK(skipped.status == RowStatus::skipped_budget);
}

TEST_CASE("property suite passes on an alternate seed") {
  HarnessOptions opts;
  opts.seed = 7;
  opts.trials = 8;
  std::vector<ReportRow> rows = property_suite(opts);
  REQUIRE(rows.size() == 14);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string prefix = "p" + std::string(i + 1 < 10 ? "0" : "") + std::to_string(i + 1);
    CHECK(rows[i].claim_id.substr(0, 3) == prefix);
    INFO(rows[i].claim_id, ": ", rows[i].computed);
    CHECK(rows[i].status != RowStatus::fail);
  }
  CHECK(all_pass(rows));
}
