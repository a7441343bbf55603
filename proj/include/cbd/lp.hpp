#pragma once

#include <cstddef>
#include <vector>

#include "cbd/errors.hpp"
#include "cbd/rational.hpp"

namespace cbd {

// Standard form: maximize objective . x  subject to  constraints x = rhs,
// x >= 0. All entries exact rationals.
struct LinearProgram {
  std::vector<Rat> objective;
  std::vector<std::vector<Rat>> constraints;
  std::vector<Rat> rhs;

  std::size_t variable_count() const { return objective.size(); }
  std::size_t constraint_count() const { return constraints.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* lp_status_name(LpStatus status);

struct LpVerdict {
  LpStatus status = LpStatus::Infeasible;
  Rat value;                  // set when Optimal
  std::vector<Rat> solution;  // set when Optimal; satisfies the constraints exactly
};

// Two-phase primal simplex on a dense rational tableau. Bland's rule for
// both the entering and the leaving variable, so the solve terminates and
// is deterministic. Infeasible is reported only on a strictly positive
// phase-1 optimum; redundant constraint rows are dropped between phases.
LpVerdict solve_lp(const LinearProgram& program);

}  // namespace cbd
