#include "cbd/lp.hpp"

#include <limits>
#include <string>

namespace cbd {

const char* lp_status_name(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
  }
  return "Unknown";
}

namespace {

constexpr std::size_t kNoColumn = std::numeric_limits<std::size_t>::max();

// Dense tableau kept in canonical form: basis columns are unit vectors,
// `reduced[j]` = c_j - z_j for the current phase objective (maximization,
// so a positive entry means the column can improve).
struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  std::vector<Rat> reduced;
  std::vector<std::size_t> basis;

  void pivot(std::size_t pivot_row, std::size_t pivot_col) {
    std::vector<Rat>& prow = a[pivot_row];
    const Rat pivot_value = prow[pivot_col];
    if (pivot_value != 1) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (prow[j] != 0) prow[j] /= pivot_value;
      }
      b[pivot_row] /= pivot_value;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row) continue;
      const Rat factor = a[i][pivot_col];
      if (factor == 0) continue;
      std::vector<Rat>& row = a[i];
      for (std::size_t j = 0; j < cols; ++j) {
        if (prow[j] != 0) row[j] -= factor * prow[j];
      }
      b[i] -= factor * b[pivot_row];
    }
    const Rat factor = reduced[pivot_col];
    if (factor != 0) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (prow[j] != 0) reduced[j] -= factor * prow[j];
      }
    }
    basis[pivot_row] = pivot_col;
  }

  // Smallest-index improving column (Bland), kNoColumn when optimal.
  std::size_t entering_column() const {
    for (std::size_t j = 0; j < cols; ++j) {
      if (reduced[j] > 0) return j;
    }
    return kNoColumn;
  }

  // Min-ratio row; ties broken by the smallest basic variable index.
  std::size_t leaving_row(std::size_t entering) const {
    std::size_t best = kNoColumn;
    Rat best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (a[i][entering] <= 0) continue;
      Rat ratio = b[i] / a[i][entering];
      if (best == kNoColumn || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  // Returns false when the phase objective is unbounded above.
  bool iterate() {
    for (;;) {
      std::size_t entering = entering_column();
      if (entering == kNoColumn) return true;
      std::size_t leaving = leaving_row(entering);
      if (leaving == kNoColumn) return false;
      pivot(leaving, entering);
    }
  }
};

}  // namespace

LpVerdict solve_lp(const LinearProgram& program) {
  const std::size_t n = program.variable_count();
  const std::size_t m = program.constraint_count();
  if (program.rhs.size() != m) {
    fail(ErrorCode::DimensionMismatch,
         "rhs has " + std::to_string(program.rhs.size()) + " entries for " + std::to_string(m) +
             " constraints");
  }
  for (const auto& row : program.constraints) {
    if (row.size() != n) {
      fail(ErrorCode::DimensionMismatch,
           "constraint row has " + std::to_string(row.size()) + " coefficients for " +
               std::to_string(n) + " variables");
    }
  }

  // Phase 1: [A | I] with one artificial per row, rhs made nonnegative.
  Tableau t;
  t.rows = m;
  t.cols = n + m;
  t.a.assign(m, std::vector<Rat>(t.cols, Rat(0)));
  t.b.resize(m);
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = program.rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& v = program.constraints[i][j];
      if (v != 0) t.a[i][j] = flip ? Rat(-v) : v;
    }
    t.b[i] = flip ? Rat(-program.rhs[i]) : program.rhs[i];
    t.a[i][n + i] = 1;
    t.basis[i] = n + i;
  }
  // Maximize -(sum of artificials): reduced cost of an original column is
  // its column sum, of an artificial column zero.
  t.reduced.assign(t.cols, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rat sum = 0;
    for (std::size_t i = 0; i < m; ++i) sum += t.a[i][j];
    t.reduced[j] = sum;
  }
  t.iterate();  // bounded above by 0, cannot report unbounded

  Rat infeasibility = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] >= n) infeasibility += t.b[i];
  }
  if (infeasibility > 0) {
    return LpVerdict{LpStatus::Infeasible, Rat(0), {}};
  }

  // Drive remaining artificials out of the basis at zero level; a row with
  // no original coefficient left is redundant and is removed.
  for (std::size_t i = 0; i < t.rows;) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = kNoColumn;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.a[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col != kNoColumn) {
      t.pivot(i, col);
      ++i;
    } else {
      t.a.erase(t.a.begin() + i);
      t.b.erase(t.b.begin() + i);
      t.basis.erase(t.basis.begin() + i);
      --t.rows;
    }
  }

  // Phase 2: drop artificial columns and install the real objective.
  t.cols = n;
  for (auto& row : t.a) row.resize(n);
  t.reduced.assign(n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rat z = 0;
    for (std::size_t i = 0; i < t.rows; ++i) {
      if (t.a[i][j] != 0) z += program.objective[t.basis[i]] * t.a[i][j];
    }
    t.reduced[j] = program.objective[j] - z;
  }
  if (!t.iterate()) {
    return LpVerdict{LpStatus::Unbounded, Rat(0), {}};
  }

  LpVerdict verdict;
  verdict.status = LpStatus::Optimal;
  verdict.solution.assign(n, Rat(0));
  for (std::size_t i = 0; i < t.rows; ++i) {
    verdict.solution[t.basis[i]] = t.b[i];
  }
  verdict.value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (verdict.solution[j] != 0) verdict.value += program.objective[j] * verdict.solution[j];
  }
  return verdict;
}

}  // namespace cbd
