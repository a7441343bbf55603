#include "cbd/connection.hpp"

#include <algorithm>
#include <string>

#include "cbd/lp.hpp"

namespace cbd {

namespace {

void check_marginals(const Connection& connection) {
  if (connection.marginals.empty()) {
    fail(ErrorCode::EmptyInput, "connection of '" + connection.object.name + "' has no contexts");
  }
  for (const auto& [context, marginal] : connection.marginals) {
    if (marginal.size() != connection.alphabet.size()) {
      fail(ErrorCode::ShapeMismatch,
           "marginal in context '" + context.name + "' has " + std::to_string(marginal.size()) +
               " entries for an alphabet of " + std::to_string(connection.alphabet.size()));
    }
    Rat sum = 0;
    for (const Rat& p : marginal) {
      if (p < 0) {
        fail(ErrorCode::NegativeProbability,
             "negative marginal probability in context '" + context.name + "'");
      }
      sum += p;
    }
    if (sum != 1) {
      fail(ErrorCode::ProbabilitySumNotOne,
           "marginal in context '" + context.name + "' sums to " + format_rational(sum));
    }
  }
}

}  // namespace

ConnectionMaxEq max_eq_connection(const Connection& connection) {
  check_marginals(connection);
  ConnectionMaxEq result;
  result.object = connection.object;
  result.value = 0;
  for (std::size_t i = 0; i < connection.alphabet.size(); ++i) {
    Rat lowest;
    bool first = true;
    for (const auto& [context, marginal] : connection.marginals) {
      if (first || marginal[i] < lowest) lowest = marginal[i];
      first = false;
    }
    result.witness_submeasure.emplace(connection.alphabet.symbols()[i], lowest);
    result.value += lowest;
  }
  return result;
}

Rat max_eq_binary(const std::vector<Rat>& expectations) {
  if (expectations.empty()) {
    fail(ErrorCode::EmptyInput, "max_eq_binary needs at least one expectation");
  }
  for (const Rat& e : expectations) {
    if (e < -1 || e > 1) {
      fail(ErrorCode::InvalidExpectation,
           "expectation " + format_rational(e) + " outside [-1, 1]");
    }
  }
  auto [lo, hi] = std::minmax_element(expectations.begin(), expectations.end());
  return Rat(1) - (*hi - *lo) / 2;
}

Rat max_eq_oracle(const Connection& connection) {
  check_marginals(connection);
  const std::size_t contexts = connection.marginals.size();
  const std::size_t alphabet = connection.alphabet.size();
  if (contexts > kOracleMaxContexts || alphabet > kOracleMaxAlphabet) {
    fail(ErrorCode::OracleTooLarge,
         "oracle bound exceeded: " + std::to_string(contexts) + " contexts, alphabet " +
             std::to_string(alphabet));
  }

  // One variable per joint outcome over all contexts of the connection,
  // one marginal row per (context, symbol), diagonal outcomes rewarded.
  std::size_t joint = 1;
  for (std::size_t i = 0; i < contexts; ++i) joint *= alphabet;

  LinearProgram program;
  program.objective.assign(joint, Rat(0));
  program.constraints.assign(contexts * alphabet, std::vector<Rat>(joint, Rat(0)));
  program.rhs.assign(contexts * alphabet, Rat(0));

  std::size_t context_index = 0;
  for (const auto& [context, marginal] : connection.marginals) {
    for (std::size_t s = 0; s < alphabet; ++s) {
      program.rhs[context_index * alphabet + s] = marginal[s];
    }
    ++context_index;
  }

  std::vector<std::size_t> digits(contexts, 0);
  for (std::size_t v = 0; v < joint; ++v) {
    bool diagonal = true;
    for (std::size_t c = 0; c < contexts; ++c) {
      program.constraints[c * alphabet + digits[c]][v] = 1;
      if (digits[c] != digits[0]) diagonal = false;
    }
    if (diagonal) program.objective[v] = 1;
    for (std::size_t c = contexts; c-- > 0;) {
      if (++digits[c] < alphabet) break;
      digits[c] = 0;
    }
  }

  LpVerdict verdict = solve_lp(program);
  if (verdict.status != LpStatus::Optimal) {
    fail(ErrorCode::ShapeMismatch, "connection coupling polytope unexpectedly " +
                                       std::string(lp_status_name(verdict.status)));
  }
  return verdict.value;
}

}  // namespace cbd
