#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blab/graph.hpp"
#include "blab/solver.hpp"

namespace blab {

enum class RowStatus { pass, fail, certificate_only, skipped_budget };

std::string status_name(RowStatus s);

// One verified claim. A pass row means the stated relation held exactly;
// certificate_only means predicates and weights were verified but no
// optimality claim was attempted or it exceeded its budget.
struct ReportRow {
  std::string claim_id;
  std::string instance;
  std::string expected;
  std::string computed;
  RowStatus status = RowStatus::fail;
  std::int64_t elapsed_ms = 0;
};

struct HarnessOptions {
  std::int64_t node_budget = 100'000'000;        // ordinary exact rows
  std::int64_t anchor_node_budget = 1'000'000'000;  // the 21-vertex tree row
  double anchor_time_seconds = 1800;
  std::uint64_t seed = 1;
  int trials = 200;
  int threads = 0;
};

// Rows c01..c12, deterministic order, one per acceptance claim group.
// Never throws; failures become rows.
std::vector<ReportRow> reproduce_table(const HarnessOptions& opts = {});

// Rows p01..p14: seeded randomized invariant checks plus fixed instances.
std::vector<ReportRow> property_suite(const HarnessOptions& opts = {});

// All nine parameters on one graph, chain relations evaluated.
ReportRow inequality_chain_check(const Graph& g, const std::string& instance,
                                 const HarnessOptions& opts = {});

std::string report_csv(const std::vector<ReportRow>& rows);
std::string report_json(const std::vector<ReportRow>& rows);

// True when no row failed (certificate_only and skipped_budget count as ok).
bool all_pass(const std::vector<ReportRow>& rows);

}  // namespace blab
