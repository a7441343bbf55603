#include "cbd/cyclic.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace cbd {

namespace {

Rat rat_abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

Rat inconsistency_term(const CyclicStructure& structure) {
  Rat sum = 0;
  for (std::size_t i = 0; i < structure.rank; ++i) {
    sum += rat_abs(structure.expectation_in_own[i] - structure.expectation_in_prev[i]);
  }
  return sum;
}

}  // namespace

CyclicDetection detect_cyclic(const System& system) {
  for (const auto& [object, alphabet] : system.objects()) {
    if (!alphabet.is_binary()) {
      return NotCyclic{"object '" + object.name + "' is not a binary +1/-1 measurement"};
    }
  }
  for (const auto& [context, bunch] : system.bunches()) {
    if (bunch.members.size() != 2) {
      return NotCyclic{"context '" + context.name + "' has arity " +
                       std::to_string(bunch.members.size()) + ", expected 2"};
    }
  }
  for (const auto& [object, alphabet] : system.objects()) {
    std::size_t degree = system.contexts_of(object).size();
    if (degree != 2) {
      return NotCyclic{"object '" + object.name + "' appears in " + std::to_string(degree) +
                       " contexts, expected 2"};
    }
  }
  const std::size_t rank = system.object_count();
  if (system.context_count() != rank) {
    return NotCyclic{"object and context counts differ"};
  }
  if (rank < 2) {
    return NotCyclic{"rank " + std::to_string(rank) + " is below 2"};
  }

  // Walk the object/context incidence cycle from the least object id.
  const ObjectId start = system.objects().begin()->first;
  const auto& start_contexts = system.contexts_of(start);

  auto other_member = [&](const ContextId& context, const ObjectId& object) {
    const Bunch& bunch = system.bunch(context);
    return bunch.members[0] == object ? bunch.members[1] : bunch.members[0];
  };
  auto is_first_member = [&](const ContextId& context, const ObjectId& object) {
    return system.bunch(context).members[0] == object;
  };

  ContextId first_context = start_contexts[0];
  {
    const ContextId& alternative = start_contexts[1];
    const ObjectId via_first = other_member(first_context, start);
    const ObjectId via_alt = other_member(alternative, start);
    if (via_alt < via_first) {
      first_context = alternative;
    } else if (via_alt == via_first) {
      // Rank-2 tie: both directions reach the same neighbor. Prefer the
      // context that lists the start object first, then the lesser id.
      bool first_lists_start = is_first_member(first_context, start);
      bool alt_lists_start = is_first_member(alternative, start);
      if (alt_lists_start && !first_lists_start) {
        first_context = alternative;
      } else if (alt_lists_start == first_lists_start && alternative < first_context) {
        first_context = alternative;
      }
    }
  }

  CyclicStructure structure;
  structure.rank = rank;
  std::set<ObjectId> visited;
  ObjectId object = start;
  ContextId context = first_context;
  for (std::size_t step = 0; step < rank; ++step) {
    if (!visited.insert(object).second) {
      return NotCyclic{"incidence graph is not a single cycle"};
    }
    structure.object_order.push_back(object);
    structure.context_order.push_back(context);
    ObjectId next_object = other_member(context, object);
    const auto& next_contexts = system.contexts_of(next_object);
    context = next_contexts[0] == context ? next_contexts[1] : next_contexts[0];
    object = next_object;
  }
  if (object != start) {
    return NotCyclic{"incidence graph is not a single cycle"};
  }

  for (std::size_t i = 0; i < rank; ++i) {
    const ObjectId& current = structure.object_order[i];
    const ObjectId& successor = structure.object_order[(i + 1) % rank];
    const ContextId& own = structure.context_order[i];
    const ContextId& prev = structure.context_order[(i + rank - 1) % rank];
    structure.product_expectations.push_back(
        bunch_product_expectation(system, own, current, successor));
    structure.expectation_in_own.push_back(bunch_expectation(system, own, current));
    structure.expectation_in_prev.push_back(bunch_expectation(system, prev, current));
  }
  return structure;
}

Rat s_odd(const std::vector<Rat>& xs) {
  if (xs.empty()) fail(ErrorCode::EmptyInput, "s_odd of an empty list");
  Rat total = 0;
  Rat smallest_magnitude;
  std::size_t negatives = 0;
  bool first = true;
  for (const Rat& x : xs) {
    Rat magnitude = rat_abs(x);
    total += magnitude;
    if (x < 0) ++negatives;
    if (first || magnitude < smallest_magnitude) smallest_magnitude = magnitude;
    first = false;
  }
  if (negatives % 2 == 1) return total;
  return total - 2 * smallest_magnitude;
}

Rat s_odd_oracle(const std::vector<Rat>& xs) {
  if (xs.empty()) fail(ErrorCode::EmptyInput, "s_odd of an empty list");
  if (xs.size() > kSOddOracleMaxArity) {
    fail(ErrorCode::OracleTooLarge,
         "s_odd oracle bound exceeded: " + std::to_string(xs.size()) + " terms");
  }
  const std::size_t k = xs.size();
  Rat best;
  bool first = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (std::popcount(mask) % 2 == 0) continue;
    Rat sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        sum -= xs[i];
      } else {
        sum += xs[i];
      }
    }
    if (first || sum > best) best = sum;
    first = false;
  }
  return best;
}

Rat cyclic_measure(const CyclicStructure& structure) {
  Rat slack = s_odd(structure.product_expectations) - inconsistency_term(structure) -
              Rat(static_cast<long>(structure.rank) - 2);
  if (slack <= 0) return Rat(0);
  return slack / 2;
}

bool cyclic_criterion(const CyclicStructure& structure) {
  return s_odd(structure.product_expectations) >
         Rat(static_cast<long>(structure.rank) - 2) + inconsistency_term(structure);
}

}  // namespace cbd
