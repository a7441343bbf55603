#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cbd/connection.hpp"
#include "cbd/lp.hpp"
#include "cbd/model.hpp"

namespace cbd {

inline constexpr std::uint64_t kDefaultAssignmentCap = std::uint64_t{1} << 20;

// One (context, object) measurement slot of the system.
struct SlotRef {
  ContextId context;
  ObjectId object;
  std::size_t alphabet_size = 0;
};

// Enumerates every global outcome assignment of a system: one symbol per
// slot. Slot order is fixed and documented: contexts sorted by id, members
// in bunch order. An assignment index is the mixed-radix number whose most
// significant digit is slot 0 (the last slot varies fastest); digit values
// are alphabet indices.
class AssignmentSpace {
 public:
  explicit AssignmentSpace(const System& system);

  const std::vector<SlotRef>& slots() const { return slots_; }
  const BigInt& total_assignments() const { return total_; }

  bool fits(std::uint64_t cap) const { return total_ <= cap; }
  std::uint64_t total_u64() const;  // requires fits(2^63)

  // Slot indices of the given object, ascending.
  const std::vector<std::size_t>& slots_of_object(const ObjectId& object) const;
  // Contiguous slot range [first, last) of the given context.
  std::pair<std::size_t, std::size_t> slot_range_of_context(const ContextId& context) const;

  void decode(std::uint64_t index, std::vector<std::size_t>& digits) const;
  std::uint64_t encode(const std::vector<std::size_t>& digits) const;

  // Number of objects whose slots all carry the same symbol.
  std::size_t agreement_count(const std::vector<std::size_t>& digits) const;

 private:
  std::vector<SlotRef> slots_;
  std::map<ContextId, std::pair<std::size_t, std::size_t>> context_ranges_;
  std::map<ObjectId, std::vector<std::size_t>> object_slots_;
  BigInt total_ = 1;
};

// A joint distribution over the assignment space whose per-context
// marginals reproduce every bunch. `distribution` holds the support keyed
// by assignment index.
struct CouplingSolution {
  std::map<std::uint64_t, Rat> distribution;
  std::map<ObjectId, Rat> per_connection_eq;  // Pr[all slots of q agree]
  Rat total;                                  // sum over objects
};

enum class Method { Lp, CyclicClosedForm, Both };

const char* method_name(Method method);

struct ContextualityReport {
  Rat maxeq_system;                                   // best achievable sum of eq
  Rat maxeq_connections_sum;                          // sum of per-connection maxima
  std::map<ObjectId, ConnectionMaxEq> connection_maxeq;
  Rat cntx;                                           // their difference, >= 0
  bool contextual = false;
  std::optional<CouplingSolution> description;        // present iff cntx == 0
  Method method = Method::Lp;
};

// One LP variable per global assignment; equality rows fix the full joint
// table of every bunch (all outcome tuples, including zero-probability
// ones); the objective coefficient of an assignment is the number of
// objects whose slots all agree there, making the objective the sum of
// per-object agreement probabilities. Raises Error{TooLarge} over the cap.
LinearProgram build_coupling_lp(const System& system,
                                std::uint64_t cap = kDefaultAssignmentCap);

// Optimal value of the coupling LP. Always Optimal: the independent
// coupling is a feasible point of every instance.
Rat max_eq_system(const System& system, std::uint64_t cap = kDefaultAssignmentCap);

// The LP route to the contextuality verdict and measure. When the measure
// is zero the optimal coupling is returned as the noncontextual
// description.
ContextualityReport contextuality_measure(const System& system,
                                          std::uint64_t cap = kDefaultAssignmentCap);

// True iff `coupling` reproduces every bunch marginal exactly and attains
// the per-connection maximum agreement for every object.
bool verify_description(const System& system,
                        const std::map<std::uint64_t, Rat>& coupling);

// The product coupling: bunch copies drawn independently. Feasibility
// witness for the coupling LP.
std::map<std::uint64_t, Rat> independent_coupling(const System& system);

// Agreement probability per object under an arbitrary distribution on the
// assignment space.
std::map<ObjectId, Rat> coupling_connection_eq(const System& system,
                                               const std::map<std::uint64_t, Rat>& coupling);

}  // namespace cbd
