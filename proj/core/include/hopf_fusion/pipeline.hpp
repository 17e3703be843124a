// Stage runner: hypothesis audit, field extension, every verification stage
// in order, and the line-oriented text report.

#ifndef HOPF_FUSION_PIPELINE_HPP_
#define HOPF_FUSION_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopf_fusion/grothendieck.hpp"
#include "hopf_fusion/hopf.hpp"
#include "hopf_fusion/report.hpp"

namespace hopf_fusion {

enum class Stage { Validate, Integrals, Blocks, UV, Smash, Simples, Fusion, Theorem, QDims };

const char* to_string(Stage s);
// "integrals", "blocks", "uv", "smash", "simples", "fusion", "theorem",
// "qdims" (and "validate"). Throws InvalidInput otherwise.
Stage parse_stage(const std::string& name);

// Every check id the pipeline can emit, in report order, with its stage.
const std::vector<std::pair<std::string, Stage>>& report_manifest();

// Throws HypothesisViolation unless p^2 > dim and p does not divide 2 dim.
void check_hypotheses(std::uint32_t p, int dim);

struct PipelineOptions {
  Stage through = Stage::QDims;
  std::uint64_t seed = 1;
  std::string input_name;
};

struct PipelineResult {
  std::string input_name;
  std::uint64_t seed = 1;
  Stage through = Stage::QDims;
  std::optional<Stage> reached;  // last completed stage
  std::vector<std::string> field_history;  // fields tried, last one used
  std::vector<std::pair<std::string, std::string>> artifacts;
  Report checks;
  std::optional<FusionTable> n_table, l_table, smash_table, c_table;

  bool all_passed() const { return checks.all_passed(); }
};

// Runs the stages up to options.through. Hypothesis violations, invalid
// input and internal errors propagate as exceptions; proposition failures
// become failing checks. Stops after Validate when the axioms fail.
PipelineResult run_pipeline(const HopfAlgebra& h, const PipelineOptions& options);

// Deterministic text rendering; every manifest id appears exactly once,
// as pass, fail or skipped.
std::string render_report(const PipelineResult& r);

// Axiom-by-axiom text for the validate command.
std::string render_validation(const ValidationReport& v, const std::string& input_name);

} // namespace hopf_fusion

#endif
