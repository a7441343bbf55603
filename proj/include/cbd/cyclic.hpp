#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cbd/model.hpp"
#include "cbd/rational.hpp"

namespace cbd {

inline constexpr std::size_t kSOddOracleMaxArity = 24;

// A rank-n cyclic system: n binary objects measured two at a time around a
// single cycle; object i sits in contexts i-1 and i (indices mod n).
// Orientation is canonical: the walk starts at the lexicographically least
// object and proceeds toward its lexicographically lesser neighbor. All
// derived quantities are orientation-invariant.
struct CyclicStructure {
  std::size_t rank = 0;
  std::vector<ObjectId> object_order;    // q_1 .. q_n
  std::vector<ContextId> context_order;  // context i pairs q_i with q_{i+1 mod n}
  std::vector<Rat> product_expectations; // <q_i * q_{i+1}> in context i
  std::vector<Rat> expectation_in_own;   // <q_i> in context i
  std::vector<Rat> expectation_in_prev;  // <q_i> in context i-1
};

struct NotCyclic {
  std::string reason;
};

using CyclicDetection = std::variant<CyclicStructure, NotCyclic>;

// Recognizes the cyclic shape (rank >= 2) or names the violated condition.
CyclicDetection detect_cyclic(const System& system);

// Max of +-x_1 +- ... +- x_k over sign assignments with an odd number of
// minus signs. Closed form: sum of |x_i|, minus 2 min |x_i| when the count
// of strictly negative entries is even.
Rat s_odd(const std::vector<Rat>& xs);

// Direct enumeration of the odd-parity sign assignments; k bounded by
// kSOddOracleMaxArity.
Rat s_odd_oracle(const std::vector<Rat>& xs);

// Closed-form contextuality measure:
//   1/2 * max{ s_odd(products) - sum_i |<q_i>_own - <q_i>_prev| - (n-2), 0 }.
Rat cyclic_measure(const CyclicStructure& structure);

// Contextual iff s_odd(products) exceeds (n-2) plus the marginal
// inconsistency term; equivalent to cyclic_measure > 0.
bool cyclic_criterion(const CyclicStructure& structure);

}  // namespace cbd
