#include "cbd/model.hpp"

#include <algorithm>
#include <set>

namespace cbd {

namespace {

bool is_plus_minus_one(const std::vector<std::string>& symbols) {
  if (symbols.size() != 2) return false;
  return (symbols[0] == "+1" && symbols[1] == "-1") ||
         (symbols[0] == "-1" && symbols[1] == "+1");
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) {
    fail(ErrorCode::AlphabetMismatch, "alphabet must have at least 2 symbols");
  }
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) fail(ErrorCode::AlphabetMismatch, "empty outcome symbol");
    if (!seen.insert(s).second) {
      fail(ErrorCode::AlphabetMismatch, "duplicate outcome symbol '" + s + "'");
    }
  }
  binary_ = is_plus_minus_one(symbols_);
}

std::optional<std::size_t> Alphabet::index_of(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == symbol) return i;
  }
  return std::nullopt;
}

Rat Alphabet::numeric_value(std::size_t index) const {
  if (!binary_) {
    fail(ErrorCode::AlphabetMismatch, "numeric value requested for a non-binary alphabet");
  }
  return symbols_[index] == "+1" ? Rat(1) : Rat(-1);
}

const Alphabet& System::alphabet_of(const ObjectId& object) const {
  auto it = objects_.find(object);
  if (it == objects_.end()) {
    fail(ErrorCode::UnknownObject, "unknown object '" + object.name + "'");
  }
  return it->second;
}

const Bunch& System::bunch(const ContextId& context) const {
  auto it = bunches_.find(context);
  if (it == bunches_.end()) {
    fail(ErrorCode::UnknownContext, "unknown context '" + context.name + "'");
  }
  return it->second;
}

const std::vector<ContextId>& System::contexts_of(const ObjectId& object) const {
  auto it = contexts_of_.find(object);
  if (it == contexts_of_.end()) {
    fail(ErrorCode::UnknownObject, "unknown object '" + object.name + "'");
  }
  return it->second;
}

System build_system(const std::vector<ObjectDecl>& objects,
                    const std::vector<BunchDecl>& bunches) {
  System system;

  for (const auto& decl : objects) {
    if (decl.id.name.empty()) fail(ErrorCode::DuplicateId, "empty object id");
    if (!system.objects_.emplace(decl.id, decl.alphabet).second) {
      fail(ErrorCode::DuplicateId, "duplicate object id '" + decl.id.name + "'");
    }
  }

  for (const auto& decl : bunches) {
    if (decl.context.name.empty()) fail(ErrorCode::DuplicateId, "empty context id");
    if (system.bunches_.count(decl.context)) {
      fail(ErrorCode::DuplicateId, "duplicate context id '" + decl.context.name + "'");
    }
    if (decl.members.empty()) {
      fail(ErrorCode::EmptyContext, "context '" + decl.context.name + "' has no members");
    }

    std::set<ObjectId> member_set;
    std::vector<const Alphabet*> member_alphabets;
    for (const auto& member : decl.members) {
      auto it = system.objects_.find(member);
      if (it == system.objects_.end()) {
        fail(ErrorCode::UnknownObject, "context '" + decl.context.name +
                                           "' names unknown object '" + member.name + "'");
      }
      if (!member_set.insert(member).second) {
        fail(ErrorCode::DuplicateId, "object '" + member.name + "' listed twice in context '" +
                                         decl.context.name + "'");
      }
      member_alphabets.push_back(&it->second);
    }

    Bunch bunch;
    bunch.context = decl.context;
    bunch.members = decl.members;
    Rat sum = 0;
    for (const auto& [tuple, p] : decl.entries) {
      if (tuple.size() != decl.members.size()) {
        fail(ErrorCode::InvalidOutcome,
             "outcome tuple of arity " + std::to_string(tuple.size()) + " in context '" +
                 decl.context.name + "' (expected " + std::to_string(decl.members.size()) + ")");
      }
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (!member_alphabets[i]->index_of(tuple[i])) {
          fail(ErrorCode::AlphabetMismatch,
               "symbol '" + tuple[i] + "' is not in the alphabet of object '" +
                   decl.members[i].name + "' (context '" + decl.context.name + "')");
        }
      }
      if (p < 0) {
        fail(ErrorCode::NegativeProbability,
             "negative probability " + format_rational(p) + " in context '" +
                 decl.context.name + "'");
      }
      sum += p;
      if (p == 0) continue;  // keep the support only
      if (!bunch.table.emplace(tuple, p).second) {
        fail(ErrorCode::DuplicateId,
             "duplicate outcome tuple in context '" + decl.context.name + "'");
      }
    }
    if (sum != 1) {
      fail(ErrorCode::ProbabilitySumNotOne,
           "probabilities in context '" + decl.context.name + "' sum to " +
               format_rational(sum) + " (deficit " + format_rational(Rat(1) - sum) + ")");
    }
    system.bunches_.emplace(decl.context, std::move(bunch));
  }

  for (const auto& [id, bunch] : system.bunches_) {
    for (const auto& member : bunch.members) {
      system.contexts_of_[member].push_back(id);
    }
  }
  for (const auto& [id, alphabet] : system.objects_) {
    if (!system.contexts_of_.count(id)) {
      fail(ErrorCode::UnusedObject, "object '" + id.name + "' appears in no context");
    }
  }
  return system;
}

Connection connection_of(const System& system, const ObjectId& object) {
  Connection connection{object, system.alphabet_of(object), {}};
  const std::size_t alphabet_size = connection.alphabet.size();
  for (const auto& context : system.contexts_of(object)) {
    const Bunch& bunch = system.bunch(context);
    std::size_t position =
        std::find(bunch.members.begin(), bunch.members.end(), object) - bunch.members.begin();
    std::vector<Rat> marginal(alphabet_size, Rat(0));
    for (const auto& [tuple, p] : bunch.table) {
      marginal[*connection.alphabet.index_of(tuple[position])] += p;
    }
    connection.marginals.emplace(context, std::move(marginal));
  }
  return connection;
}

ConsistencyReport is_consistently_connected(const System& system) {
  ConsistencyReport report;
  for (const auto& [object, alphabet] : system.objects()) {
    Connection connection = connection_of(system, object);
    Rat worst = 0;
    for (auto first = connection.marginals.begin(); first != connection.marginals.end(); ++first) {
      for (auto second = std::next(first); second != connection.marginals.end(); ++second) {
        Rat distance = 0;
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
          Rat diff = first->second[i] - second->second[i];
          distance += diff < 0 ? Rat(-diff) : diff;
        }
        distance /= 2;  // total variation
        worst = std::max(worst, distance);
      }
    }
    if (worst != 0) report.consistent = false;
    report.per_object_max_discrepancy.emplace(object, worst);
  }
  return report;
}

Rat bunch_expectation(const System& system, const ContextId& context, const ObjectId& object) {
  const Bunch& bunch = system.bunch(context);
  const Alphabet& alphabet = system.alphabet_of(object);
  auto it = std::find(bunch.members.begin(), bunch.members.end(), object);
  if (it == bunch.members.end()) {
    fail(ErrorCode::UnknownObject,
         "object '" + object.name + "' is not in context '" + context.name + "'");
  }
  std::size_t position = it - bunch.members.begin();
  Rat expectation = 0;
  for (const auto& [tuple, p] : bunch.table) {
    expectation += p * alphabet.numeric_value(*alphabet.index_of(tuple[position]));
  }
  return expectation;
}

Rat bunch_product_expectation(const System& system, const ContextId& context,
                              const ObjectId& first, const ObjectId& second) {
  const Bunch& bunch = system.bunch(context);
  const Alphabet& first_alphabet = system.alphabet_of(first);
  const Alphabet& second_alphabet = system.alphabet_of(second);
  auto first_it = std::find(bunch.members.begin(), bunch.members.end(), first);
  auto second_it = std::find(bunch.members.begin(), bunch.members.end(), second);
  if (first_it == bunch.members.end() || second_it == bunch.members.end()) {
    fail(ErrorCode::UnknownObject, "context '" + context.name + "' does not measure both objects");
  }
  std::size_t i = first_it - bunch.members.begin();
  std::size_t j = second_it - bunch.members.begin();
  Rat expectation = 0;
  for (const auto& [tuple, p] : bunch.table) {
    expectation += p * first_alphabet.numeric_value(*first_alphabet.index_of(tuple[i])) *
                   second_alphabet.numeric_value(*second_alphabet.index_of(tuple[j]));
  }
  return expectation;
}

}  // namespace cbd
