#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cbd/errors.hpp"
#include "cbd/rational.hpp"

namespace cbd {

// A measured object (property/quantity). Identified by name; every
// measurement of the same object shares one outcome alphabet.
struct ObjectId {
  std::string name;
  auto operator<=>(const ObjectId&) const = default;
};

// A context label. Two contexts may cover the same objects and remain
// distinct; the label alone decides identity.
struct ContextId {
  std::string name;
  auto operator<=>(const ContextId&) const = default;
};

// Ordered outcome symbols of one object. At least two, all distinct.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  const std::vector<std::string>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

  // True iff the symbols are exactly +1 and -1, the case in which
  // expectation-based formulas apply.
  bool is_binary() const { return binary_; }

  std::optional<std::size_t> index_of(std::string_view symbol) const;

  // +1 or -1 as a rational; only meaningful for binary alphabets.
  Rat numeric_value(std::size_t index) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
  bool binary_ = false;
};

using OutcomeTuple = std::vector<std::string>;

// Joint distribution of the measurements made in one context. `table`
// holds the support only; zero-probability tuples are dropped on build.
struct Bunch {
  ContextId context;
  std::vector<ObjectId> members;  // ordered
  std::map<OutcomeTuple, Rat> table;

  bool operator==(const Bunch&) const = default;
};

struct ObjectDecl {
  ObjectId id;
  Alphabet alphabet;
};

struct BunchDecl {
  ContextId context;
  std::vector<ObjectId> members;
  std::vector<std::pair<OutcomeTuple, Rat>> entries;
};

// A validated system of measurements: bunches are jointly distributed
// within themselves only. Immutable after construction; build with
// build_system().
class System {
 public:
  const std::map<ObjectId, Alphabet>& objects() const { return objects_; }
  const std::map<ContextId, Bunch>& bunches() const { return bunches_; }

  std::size_t object_count() const { return objects_.size(); }
  std::size_t context_count() const { return bunches_.size(); }

  const Alphabet& alphabet_of(const ObjectId& object) const;
  const Bunch& bunch(const ContextId& context) const;

  // Contexts containing the object, sorted by context id.
  const std::vector<ContextId>& contexts_of(const ObjectId& object) const;

  bool operator==(const System&) const = default;

 private:
  friend System build_system(const std::vector<ObjectDecl>& objects,
                             const std::vector<BunchDecl>& bunches);

  std::map<ObjectId, Alphabet> objects_;
  std::map<ContextId, Bunch> bunches_;
  std::map<ObjectId, std::vector<ContextId>> contexts_of_;
};

// Validates all invariants: unique ids, alphabets consistent across
// contexts, probabilities nonnegative and summing to exactly 1 per bunch,
// every object measured in at least one context.
System build_system(const std::vector<ObjectDecl>& objects,
                    const std::vector<BunchDecl>& bunches);

// Marginal distributions of one object across all contexts containing it.
// Not jointly distributed; the per-context marginals are indexed by the
// object's alphabet order.
struct Connection {
  ObjectId object;
  Alphabet alphabet;
  std::map<ContextId, std::vector<Rat>> marginals;
};

// Exact marginalization of each containing bunch onto the object.
Connection connection_of(const System& system, const ObjectId& object);

struct ConsistencyReport {
  bool consistent = true;
  // Max total-variation distance between any two marginals of the object.
  std::map<ObjectId, Rat> per_object_max_discrepancy;
};

// Consistent iff every object's marginal distribution is identical in all
// contexts that measure it.
ConsistencyReport is_consistently_connected(const System& system);

// Expectation of a binary (+1/-1) object's measurement in one context.
Rat bunch_expectation(const System& system, const ContextId& context,
                      const ObjectId& object);

// Expectation of the product of two binary measurements in one context.
Rat bunch_product_expectation(const System& system, const ContextId& context,
                              const ObjectId& first, const ObjectId& second);

}  // namespace cbd
