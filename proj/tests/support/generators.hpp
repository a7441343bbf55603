#pragma once

// Deterministic random instances shared by the property tests and the
// acceptance suite.

#include <random>
#include <string>
#include <vector>

#include "cbd/model.hpp"

namespace cbd::testing {

using Rng = std::mt19937_64;

// Uniform rational in [-1, 1] with denominator at most max_denominator.
inline Rat random_signed_rat(Rng& rng, int max_denominator = 16) {
  std::uniform_int_distribution<int> den_dist(1, max_denominator);
  int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(-den, den);
  return Rat(num_dist(rng), den);
}

// Exact random distribution over `cells` outcomes: an integer composition
// of a random denominator.
inline std::vector<Rat> random_distribution(Rng& rng, std::size_t cells,
                                            int max_denominator = 12) {
  std::uniform_int_distribution<int> den_dist(1, max_denominator);
  const int den = den_dist(rng);
  std::uniform_int_distribution<int> cut_dist(0, den);
  std::vector<int> cuts{0, den};
  for (std::size_t i = 0; i + 1 < cells; ++i) cuts.push_back(cut_dist(rng));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rat> probabilities;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    probabilities.emplace_back(cuts[i + 1] - cuts[i], den);
  }
  return probabilities;
}

// Binary cyclic system of the given rank with random exact bunch tables.
inline System random_cyclic_system(Rng& rng, std::size_t rank) {
  std::vector<ObjectDecl> objects;
  for (std::size_t i = 0; i < rank; ++i) {
    objects.push_back(
        ObjectDecl{ObjectId{"q" + std::to_string(i + 1)}, Alphabet{{"+1", "-1"}}});
  }
  const std::vector<OutcomeTuple> tuples = {
      {"+1", "+1"}, {"+1", "-1"}, {"-1", "+1"}, {"-1", "-1"}};
  std::vector<BunchDecl> bunches;
  for (std::size_t i = 0; i < rank; ++i) {
    BunchDecl decl;
    decl.context = ContextId{"c" + std::to_string(i + 1)};
    decl.members = {ObjectId{"q" + std::to_string(i + 1)},
                    ObjectId{"q" + std::to_string((i + 1) % rank + 1)}};
    std::vector<Rat> probabilities = random_distribution(rng, tuples.size());
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      decl.entries.emplace_back(tuples[t], probabilities[t]);
    }
    bunches.push_back(std::move(decl));
  }
  return build_system(objects, bunches);
}

// Connection over a random alphabet with random per-context marginals.
inline Connection random_connection(Rng& rng, std::size_t max_contexts = 4,
                                    std::size_t max_alphabet = 4) {
  std::uniform_int_distribution<std::size_t> context_dist(1, max_contexts);
  std::uniform_int_distribution<std::size_t> alphabet_dist(2, max_alphabet);
  const std::size_t contexts = context_dist(rng);
  const std::size_t alphabet_size = alphabet_dist(rng);

  std::vector<std::string> symbols;
  if (alphabet_size == 2 && std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    symbols = {"+1", "-1"};
  } else {
    for (std::size_t i = 0; i < alphabet_size; ++i) symbols.push_back("s" + std::to_string(i));
  }

  Connection connection{ObjectId{"q"}, Alphabet{symbols}, {}};
  for (std::size_t c = 0; c < contexts; ++c) {
    connection.marginals.emplace(ContextId{"c" + std::to_string(c + 1)},
                                 random_distribution(rng, alphabet_size));
  }
  return connection;
}

}  // namespace cbd::testing
