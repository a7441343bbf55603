#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cbd {

// Exit codes: 0 success, 1 parse/validation/ingestion error, 2 no
// applicable analysis route, 3 route disagreement (internal defect),
// 4 strictly inconsistently connected (consistency command only).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNotApplicable = 2;
inline constexpr int kExitDisagreement = 3;
inline constexpr int kExitInconsistent = 4;

// The full command-line front end; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cbd
