#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "singgraph/blowdown.hpp"
#include "singgraph/correction.hpp"
#include "singgraph/cycles.hpp"
#include "singgraph/graph.hpp"
#include "singgraph/rdp.hpp"

namespace sg {

// Everything the pipeline derives from one graph. Optional parts carry a
// reason string when they are skipped (classification and c need an almost
// reduced cycle; c additionally needs e >= 4).
struct Pipeline {
  DualGraph g;
  ComputingSequence seq;
  ScalarInvariants inv;
  std::vector<long long> profile;

  std::optional<std::vector<RdpConfiguration>> configs;
  std::optional<long long> h1a;
  std::optional<CorrectionInterval> c;
  std::optional<DimensionIncrements> dims;
  std::string skip_reason;  // set when configs/c are absent

  BlowdownStep step;
  std::optional<std::string> rdp_name;  // set when e == 3

  explicit Pipeline(DualGraph graph) : g(std::move(graph)) {}
};

// Runs the full derivation. Throws DomainError for graphs outside the model
// (not negative definite, not rational); classification failures inside the
// verified class are re-raised as InternalError.
Pipeline run_pipeline(const DualGraph& g);

struct ReportOptions {
  bool tower = false;
};

// The InvariantReport as a JSON document; byte-stable for fixed input bytes
// and tool version.
nlohmann::json build_report(const Pipeline& p, const std::string& input_bytes,
                            const ReportOptions& options);

std::string render_text(const nlohmann::json& report);

// Deterministic DOT: filled nodes meet Z negatively, hollow nodes are
// contracted; one cluster per classified configuration.
std::string emit_dot(const Pipeline& p);

struct CheckResult {
  bool ok = true;
  std::string diagnostic;  // first failing predicate when !ok
};

// schema -> validation -> negative definiteness -> rationality ->
// almost-reducedness, reporting the first failure.
CheckResult check_graph_text(const std::string& text);

std::string sha256_hex(const std::string& bytes);

// report.dump(2) + "\n"; the single serialization used everywhere.
std::string dump_json(const nlohmann::json& doc);

}  // namespace sg
