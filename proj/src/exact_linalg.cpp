#include "wonderful/exact_linalg.hpp"

#include <stdexcept>

namespace wonderful {

namespace {

// Row-reduces aug in place; returns the pivot column of each pivot row.
std::vector<std::size_t> reduce(RationalMatrix& aug, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < aug.size(); ++col) {
    std::size_t p = row;
    while (p < aug.size() && aug[p][col] == 0) ++p;
    if (p == aug.size()) continue;
    std::swap(aug[p], aug[row]);
    Rational piv = aug[row][col];
    for (auto& x : aug[row]) x /= piv;
    for (std::size_t r = 0; r < aug.size(); ++r) {
      if (r == row || aug[r][col] == 0) continue;
      Rational f = aug[r][col];
      for (std::size_t k = 0; k < aug[r].size(); ++k) aug[r][k] -= f * aug[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<Rational>> solve_in_span(const std::vector<IntVec>& columns,
                                                   const IntVec& target) {
  const std::size_t k = columns.size();
  const std::size_t n = target.size();
  if (k == 0) {
    for (auto t : target)
      if (t != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  RationalMatrix aug(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (columns[j].size() != n) throw InvalidInput("solve_in_span: length mismatch");
      aug[i][j] = columns[j][i];
    }
    aug[i][k] = target[i];
  }
  auto pivots = reduce(aug, k);
  if (pivots.size() != k) throw InvalidInput("solve_in_span: columns are dependent");
  for (std::size_t r = k; r < n; ++r)
    if (aug[r][k] != 0) return std::nullopt;
  std::vector<Rational> x(k);
  for (std::size_t r = 0; r < k; ++r) x[pivots[r]] = aug[r][k];
  return x;
}

std::optional<IntVec> solve_in_span_integral(const std::vector<IntVec>& columns,
                                             const IntVec& target) {
  auto x = solve_in_span(columns, target);
  if (!x) return std::nullopt;
  IntVec out;
  out.reserve(x->size());
  for (const auto& v : *x) {
    if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(boost::multiprecision::numerator(v)));
  }
  return out;
}

std::size_t matrix_rank(const std::vector<IntVec>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().size();
  RationalMatrix m(vectors.size(), std::vector<Rational>(n));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = vectors[i][j];
  return reduce(m, n).size();
}

bool is_positive_definite(const RationalMatrix& m) {
  const std::size_t n = m.size();
  // Gaussian elimination without pivoting: all pivots positive iff PD.
  RationalMatrix a = m;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  if (reduce(aug, n).size() != n) throw InvalidInput("inverse: singular matrix");
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

LdlFactor ldl_decompose(const RationalMatrix& m) {
  const std::size_t n = m.size();
  LdlFactor f;
  f.lower.assign(n, std::vector<Rational>(n));
  f.diag.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational d = m[j][j];
    for (std::size_t k = 0; k < j; ++k) d -= f.lower[j][k] * f.lower[j][k] * f.diag[k];
    if (d <= 0) throw InvalidInput("ldl_decompose: matrix is not positive definite");
    f.diag[j] = d;
    f.lower[j][j] = 1;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = m[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= f.lower[i][k] * f.lower[j][k] * f.diag[k];
      f.lower[i][j] = s / d;
    }
  }
  return f;
}

}  // namespace wonderful
