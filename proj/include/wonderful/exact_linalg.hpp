#pragma once

// Small dense exact linear algebra over the rationals. Sizes here are at most
// the rank of the group, so plain Gauss-Jordan is fine.

#include <optional>
#include <vector>

#include "wonderful/weyl.hpp"

namespace wonderful {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves sum_i x_i * columns[i] = target. Returns nullopt if inconsistent.
/// Requires the columns to be linearly independent.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<IntVec>& columns,
                                                   const IntVec& target);

/// Same, but only integral solutions are returned.
std::optional<IntVec> solve_in_span_integral(const std::vector<IntVec>& columns,
                                             const IntVec& target);

std::size_t matrix_rank(const std::vector<IntVec>& vectors);

/// Sylvester criterion on a symmetric matrix.
bool is_positive_definite(const RationalMatrix& m);

RationalMatrix inverse(const RationalMatrix& m);

/// m = L * diag(d) * L^T with L unit lower triangular. m must be positive definite.
struct LdlFactor {
  RationalMatrix lower;
  std::vector<Rational> diag;
};
LdlFactor ldl_decompose(const RationalMatrix& m);

}  // namespace wonderful
