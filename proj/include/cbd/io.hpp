#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cbd/model.hpp"

namespace cbd {

// Parses the JSON system format (see README: objects with alphabets,
// contexts with ordered members and a distribution of outcome tuples).
// Probabilities are "p/q" or decimal strings. Unknown keys are rejected.
System parse_system(const std::string& text);

// Reads and parses a system file; errors carry the path.
System load_system(const std::string& path);

// Canonical form: sorted ids, lowest-terms rationals, support only,
// two-space indentation, trailing newline. parse(serialize(s)) == s and a
// second serialization is byte-identical.
std::string serialize_system(const System& system);

// One observed trial: every member of the context measured once.
struct TrialRecord {
  std::string trial_id;
  ContextId context;
  std::map<ObjectId, std::string> outcomes;
};

struct EstimationReport {
  System system;
  std::map<ContextId, std::uint64_t> counts;  // trials per context
  std::vector<std::string> warnings;
};

// Long-format CSV with header trial_id,context,object,value. Rows of one
// trial must share a single context; LF or CRLF line endings.
std::vector<TrialRecord> parse_trials_csv(const std::string& text);

std::vector<TrialRecord> load_trials_csv(const std::string& path);

// Empirical-frequency system: each bunch probability is the exact count
// fraction. No smoothing. Contexts with fewer than `warn_threshold` trials
// are reported in `warnings`.
EstimationReport estimate_from_trials(const std::vector<TrialRecord>& records,
                                      std::uint64_t warn_threshold = 10);

}  // namespace cbd
