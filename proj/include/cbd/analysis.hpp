#pragma once

#include <optional>
#include <string>

#include "cbd/coupling.hpp"
#include "cbd/cyclic.hpp"
#include "cbd/model.hpp"

namespace cbd {

enum class AnalysisMethod { Auto, Lp, Cyclic };

struct CyclicAnalysis {
  CyclicStructure structure;
  Rat cntx;
  bool contextual = false;  // the closed-form criterion
};

// Combined result of the analysis routes that ran, plus the consistency
// report. `cntx`/`contextual` carry the agreed values; `methods_agree` is
// false only on an internal defect (the routes must coincide).
struct AnalysisOutput {
  ConsistencyReport consistency;
  std::map<ObjectId, ConnectionMaxEq> connection_maxeq;
  Rat maxeq_connections_sum;
  std::optional<ContextualityReport> lp;
  std::optional<CyclicAnalysis> cyclic;
  std::string not_cyclic_reason;  // set when cyclic detection failed
  Method method = Method::Lp;
  Rat cntx;
  bool contextual = false;
  bool methods_agree = true;
};

// Auto runs the closed form whenever the system is cyclic and the LP
// whenever the assignment space fits the cap, and cross-checks them when
// both ran. Raises Error{TooLarge} when no route applies, and
// Error{NotApplicable} when a forced route cannot run.
AnalysisOutput analyze_system(const System& system, AnalysisMethod method = AnalysisMethod::Auto,
                              std::uint64_t cap = kDefaultAssignmentCap);

std::string render_text(const System& system, const AnalysisOutput& output);

// Schema-stable JSON: fixed key order, rationals as "p/q" strings,
// byte-identical across reruns on identical input.
std::string render_json(const System& system, const AnalysisOutput& output);

std::string render_consistency_text(const System& system, const ConsistencyReport& report);
std::string render_consistency_json(const System& system, const ConsistencyReport& report);

}  // namespace cbd
