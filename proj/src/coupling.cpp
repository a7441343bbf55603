#include "cbd/coupling.hpp"

#include <algorithm>
#include <string>

namespace cbd {

const char* method_name(Method method) {
  switch (method) {
    case Method::Lp: return "lp";
    case Method::CyclicClosedForm: return "cyclic";
    case Method::Both: return "both";
  }
  return "unknown";
}

AssignmentSpace::AssignmentSpace(const System& system) {
  for (const auto& [context, bunch] : system.bunches()) {
    std::size_t first = slots_.size();
    for (const auto& member : bunch.members) {
      std::size_t size = system.alphabet_of(member).size();
      slots_.push_back(SlotRef{context, member, size});
      object_slots_[member].push_back(slots_.size() - 1);
      total_ *= static_cast<unsigned>(size);
    }
    context_ranges_.emplace(context, std::make_pair(first, slots_.size()));
  }
}

std::uint64_t AssignmentSpace::total_u64() const {
  if (total_ > BigInt(std::uint64_t{1} << 63)) {
    fail(ErrorCode::TooLarge, "assignment space of " + total_.str() + " points");
  }
  return total_.convert_to<std::uint64_t>();
}

const std::vector<std::size_t>& AssignmentSpace::slots_of_object(const ObjectId& object) const {
  auto it = object_slots_.find(object);
  if (it == object_slots_.end()) {
    fail(ErrorCode::UnknownObject, "unknown object '" + object.name + "'");
  }
  return it->second;
}

std::pair<std::size_t, std::size_t> AssignmentSpace::slot_range_of_context(
    const ContextId& context) const {
  auto it = context_ranges_.find(context);
  if (it == context_ranges_.end()) {
    fail(ErrorCode::UnknownContext, "unknown context '" + context.name + "'");
  }
  return it->second;
}

void AssignmentSpace::decode(std::uint64_t index, std::vector<std::size_t>& digits) const {
  digits.resize(slots_.size());
  for (std::size_t s = slots_.size(); s-- > 0;) {
    digits[s] = index % slots_[s].alphabet_size;
    index /= slots_[s].alphabet_size;
  }
}

std::uint64_t AssignmentSpace::encode(const std::vector<std::size_t>& digits) const {
  std::uint64_t index = 0;
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    index = index * slots_[s].alphabet_size + digits[s];
  }
  return index;
}

std::size_t AssignmentSpace::agreement_count(const std::vector<std::size_t>& digits) const {
  std::size_t count = 0;
  for (const auto& [object, slots] : object_slots_) {
    bool agree = true;
    for (std::size_t s : slots) {
      if (digits[s] != digits[slots[0]]) {
        agree = false;
        break;
      }
    }
    if (agree) ++count;
  }
  return count;
}

namespace {

// Advances a mixed-radix digit vector; returns false after the last one.
bool next_digits(std::vector<std::size_t>& digits, const std::vector<SlotRef>& slots) {
  for (std::size_t s = digits.size(); s-- > 0;) {
    if (++digits[s] < slots[s].alphabet_size) return true;
    digits[s] = 0;
  }
  return false;
}

// Dense per-context probability table indexed by the tuple's mixed-radix
// number in member order (zero for tuples outside the support).
std::vector<Rat> dense_bunch_table(const System& system, const Bunch& bunch) {
  std::size_t tuples = 1;
  std::vector<const Alphabet*> alphabets;
  for (const auto& member : bunch.members) {
    alphabets.push_back(&system.alphabet_of(member));
    tuples *= alphabets.back()->size();
  }
  std::vector<Rat> table(tuples, Rat(0));
  for (const auto& [tuple, p] : bunch.table) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      index = index * alphabets[i]->size() + *alphabets[i]->index_of(tuple[i]);
    }
    table[index] = p;
  }
  return table;
}

void check_cap(const AssignmentSpace& space, std::uint64_t cap) {
  if (!space.fits(cap)) {
    fail(ErrorCode::TooLarge, "coupling space has " + space.total_assignments().str() +
                                  " assignments, cap is " + std::to_string(cap));
  }
}

}  // namespace

LinearProgram build_coupling_lp(const System& system, std::uint64_t cap) {
  AssignmentSpace space(system);
  check_cap(space, cap);
  const std::uint64_t variables = space.total_u64();

  LinearProgram program;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;  // context slot ranges
  std::vector<std::size_t> row_offset;
  std::size_t rows = 0;
  for (const auto& [context, bunch] : system.bunches()) {
    ranges.push_back(space.slot_range_of_context(context));
    row_offset.push_back(rows);
    std::vector<Rat> table = dense_bunch_table(system, bunch);
    rows += table.size();
    program.rhs.insert(program.rhs.end(), table.begin(), table.end());
  }

  program.objective.assign(variables, Rat(0));
  program.constraints.assign(rows, std::vector<Rat>(variables, Rat(0)));

  std::vector<std::size_t> digits(space.slots().size(), 0);
  for (std::uint64_t v = 0; v < variables; ++v) {
    for (std::size_t c = 0; c < ranges.size(); ++c) {
      std::size_t tuple_index = 0;
      for (std::size_t s = ranges[c].first; s < ranges[c].second; ++s) {
        tuple_index = tuple_index * space.slots()[s].alphabet_size + digits[s];
      }
      program.constraints[row_offset[c] + tuple_index][v] = 1;
    }
    std::size_t agree = space.agreement_count(digits);
    if (agree > 0) program.objective[v] = static_cast<unsigned>(agree);
    if (v + 1 < variables) next_digits(digits, space.slots());
  }
  return program;
}

namespace {

LpVerdict solve_coupling(const System& system, std::uint64_t cap) {
  LpVerdict verdict = solve_lp(build_coupling_lp(system, cap));
  if (verdict.status != LpStatus::Optimal) {
    // The independent coupling is always feasible, and the objective is
    // bounded by the object count; anything else is a solver defect.
    fail(ErrorCode::ShapeMismatch,
         "coupling LP reported " + std::string(lp_status_name(verdict.status)));
  }
  return verdict;
}

}  // namespace

Rat max_eq_system(const System& system, std::uint64_t cap) {
  return solve_coupling(system, cap).value;
}

ContextualityReport contextuality_measure(const System& system, std::uint64_t cap) {
  ContextualityReport report;
  report.method = Method::Lp;
  report.maxeq_connections_sum = 0;
  for (const auto& [object, alphabet] : system.objects()) {
    ConnectionMaxEq maxeq = max_eq_connection(connection_of(system, object));
    report.maxeq_connections_sum += maxeq.value;
    report.connection_maxeq.emplace(object, std::move(maxeq));
  }

  LpVerdict verdict = solve_coupling(system, cap);
  report.maxeq_system = verdict.value;
  report.cntx = report.maxeq_connections_sum - report.maxeq_system;
  if (report.cntx < 0) {
    fail(ErrorCode::ShapeMismatch,
         "coupling optimum exceeds the sum of connection maxima: " +
             format_rational(report.maxeq_system) + " > " +
             format_rational(report.maxeq_connections_sum));
  }
  report.contextual = report.cntx > 0;
  if (!report.contextual) {
    CouplingSolution description;
    for (std::uint64_t v = 0; v < verdict.solution.size(); ++v) {
      if (verdict.solution[v] != 0) description.distribution.emplace(v, verdict.solution[v]);
    }
    description.per_connection_eq = coupling_connection_eq(system, description.distribution);
    description.total = 0;
    for (const auto& [object, eq] : description.per_connection_eq) description.total += eq;
    report.description = std::move(description);
  }
  return report;
}

std::map<ObjectId, Rat> coupling_connection_eq(const System& system,
                                               const std::map<std::uint64_t, Rat>& coupling) {
  AssignmentSpace space(system);
  std::map<ObjectId, Rat> eq;
  for (const auto& [object, alphabet] : system.objects()) eq.emplace(object, Rat(0));
  std::vector<std::size_t> digits;
  for (const auto& [index, p] : coupling) {
    space.decode(index, digits);
    for (auto& [object, value] : eq) {
      const auto& slots = space.slots_of_object(object);
      bool agree = true;
      for (std::size_t s : slots) {
        if (digits[s] != digits[slots[0]]) {
          agree = false;
          break;
        }
      }
      if (agree) value += p;
    }
  }
  return eq;
}

bool verify_description(const System& system, const std::map<std::uint64_t, Rat>& coupling) {
  AssignmentSpace space(system);
  const BigInt total = space.total_assignments();
  for (const auto& [index, p] : coupling) {
    if (BigInt(index) >= total) {
      fail(ErrorCode::ShapeMismatch, "assignment index " + std::to_string(index) +
                                         " outside a space of " + total.str());
    }
    if (p < 0) {
      fail(ErrorCode::ShapeMismatch, "negative probability in coupling");
    }
  }

  // Accumulate the per-context marginals of the candidate coupling.
  std::map<ContextId, std::map<std::size_t, Rat>> marginal;
  std::vector<std::size_t> digits;
  for (const auto& [index, p] : coupling) {
    if (p == 0) continue;
    space.decode(index, digits);
    for (const auto& [context, bunch] : system.bunches()) {
      auto [first, last] = space.slot_range_of_context(context);
      std::size_t tuple_index = 0;
      for (std::size_t s = first; s < last; ++s) {
        tuple_index = tuple_index * space.slots()[s].alphabet_size + digits[s];
      }
      marginal[context][tuple_index] += p;
    }
  }

  for (const auto& [context, bunch] : system.bunches()) {
    std::vector<Rat> expected = dense_bunch_table(system, bunch);
    const auto& got = marginal[context];
    for (std::size_t t = 0; t < expected.size(); ++t) {
      auto it = got.find(t);
      Rat mass = it == got.end() ? Rat(0) : it->second;
      if (mass != expected[t]) return false;
    }
  }

  std::map<ObjectId, Rat> eq = coupling_connection_eq(system, coupling);
  for (const auto& [object, alphabet] : system.objects()) {
    ConnectionMaxEq maxeq = max_eq_connection(connection_of(system, object));
    if (eq.at(object) != maxeq.value) return false;
  }
  return true;
}

std::map<std::uint64_t, Rat> independent_coupling(const System& system) {
  AssignmentSpace space(system);
  space.total_u64();  // bound check: products of supports stay within it

  // Product over contexts of the bunch supports: partial assignment
  // indices are extended context by context in slot order.
  std::map<std::uint64_t, Rat> result;
  result.emplace(0, Rat(1));
  for (const auto& [context, bunch] : system.bunches()) {
    auto [first, last] = space.slot_range_of_context(context);
    std::uint64_t span = 1;
    for (std::size_t s = first; s < last; ++s) span *= space.slots()[s].alphabet_size;

    std::vector<std::pair<std::uint64_t, Rat>> support;
    for (const auto& [tuple, p] : bunch.table) {
      std::uint64_t tuple_index = 0;
      for (std::size_t s = first; s < last; ++s) {
        const Alphabet& alphabet = system.alphabet_of(space.slots()[s].object);
        tuple_index = tuple_index * alphabet.size() + *alphabet.index_of(tuple[s - first]);
      }
      support.emplace_back(tuple_index, p);
    }

    std::map<std::uint64_t, Rat> extended;
    for (const auto& [prefix, p] : result) {
      for (const auto& [tuple_index, q] : support) {
        extended.emplace(prefix * span + tuple_index, p * q);
      }
    }
    result = std::move(extended);
  }
  return result;
}

}  // namespace cbd
