#pragma once

#include <map>
#include <string>
#include <vector>

#include "cbd/model.hpp"
#include "cbd/rational.hpp"

namespace cbd {

// Enumeration bounds for the independent LP oracle.
inline constexpr std::size_t kOracleMaxContexts = 6;
inline constexpr std::size_t kOracleMaxAlphabet = 4;

// maxeq of a connection: the largest probability, over all couplings of
// the connection, that every measurement of the object takes one value.
// For finite alphabets this is the mass of the largest common sub-measure,
// the pointwise minimum of the context marginals.
struct ConnectionMaxEq {
  ObjectId object;
  Rat value;
  std::map<std::string, Rat> witness_submeasure;  // symbol -> min over contexts
};

// value = sum_x min_C Pr[R = x in C]. A singleton connection (object
// measured in one context only) gets value 1: agreement across contexts is
// vacuous.
ConnectionMaxEq max_eq_connection(const Connection& connection);

// Binary fast path from expectations of +1/-1 measurements:
// 1 - (max<R> - min<R>) / 2. Equals max_eq_connection on the induced
// binary connection.
Rat max_eq_binary(const std::vector<Rat>& expectations);

// Independent check: maximizes Pr[all components equal] by LP over the
// full joint-distribution polytope of the connection. Exact; bounded to
// kOracleMaxContexts contexts and kOracleMaxAlphabet symbols.
Rat max_eq_oracle(const Connection& connection);

}  // namespace cbd
