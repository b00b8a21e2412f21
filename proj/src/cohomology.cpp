#include "wonderful/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace wonderful {

int popcount(SubsetMask m) { return std::popcount(m); }

std::vector<int> subset_indices(SubsetMask m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (m & (SubsetMask{1} << i)) out.push_back(i + 1);
  return out;
}

std::vector<int> CohomologyTable::degrees() const {
  std::vector<int> out;
  for (const auto& g : groups) out.push_back(g.degree);
  return out;
}

const DegreeGroup* CohomologyTable::group(int degree) const {
  for (const auto& g : groups)
    if (g.degree == degree) return &g;
  return nullptr;
}

BigInt CohomologyTable::dimension(int degree) const {
  const auto* g = group(degree);
  return g ? g->dimension : BigInt(0);
}

namespace {

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace

CohomologyEngine::CohomologyEngine(const WonderfulVariety& x, std::size_t max_candidates)
    : x_(x), max_candidates_(max_candidates) {
  const auto& g = *x_.group;
  const std::size_t r = x_.rank();
  if (r > 31) throw InvalidInput("too many spherical roots");
  gram_scaled_.assign(r, IntVec(r, 0));
  RationalMatrix gram(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      gram_scaled_[i][j] = g.scaled_inner_product(x_.spherical_roots[i], x_.spherical_roots[j]);
      gram[i][j] = gram_scaled_[i][j];
    }
  if (r > 0) {
    ldl_ = ldl_decompose(gram);
    gram_inverse_ = inverse(gram);
  }
}

void CohomologyEngine::require_pic(const Weight& lambda) const {
  if (!pic_contains(x_, lambda))
    throw InvalidInput("weight " + to_string(lambda) + " is not in pic(" + x_.name + ")");
}

SubsetMask CohomologyEngine::omega_signature(const Weight& mu) const {
  require_pic(mu);
  const auto& g = *x_.group;
  const Weight v = mu + g.rho();
  SubsetMask J = 0;
  for (std::size_t i = 0; i < x_.rank(); ++i)
    if (g.scaled_inner_product(v, x_.spherical_roots[i]) < 0) J |= SubsetMask{1} << i;
  return J;
}

bool CohomologyEngine::in_translated_R(const Weight& lambda, const Weight& mu, SubsetMask J) const {
  require_pic(lambda);
  require_pic(mu);
  auto c = spherical_expansion(x_, mu - lambda);
  if (!c) return false;
  for (std::size_t i = 0; i < c->size(); ++i) {
    const bool in_j = (J >> i) & 1U;
    if (in_j && (*c)[i] <= 0) return false;
    if (!in_j && (*c)[i] > 0) return false;
  }
  return true;
}

std::vector<IntVec> CohomologyEngine::candidate_coefficients(const Weight& lambda) const {
  require_pic(lambda);
  const auto& g = *x_.group;
  const std::size_t r = x_.rank();
  if (r == 0) return {IntVec{}};

  // |v + sum c_i gamma_i|^2 <= |v|^2  <=>  c^T G c + 2 b.c <= 0  (scaled integers)
  const Weight v = lambda + g.rho();
  IntVec b(r);
  for (std::size_t i = 0; i < r; ++i) b[i] = g.scaled_inner_product(v, x_.spherical_roots[i]);
  // Complete the square: (c + t)^T G (c + t) <= t^T G t, t = G^{-1} b.
  std::vector<Rational> t(r, Rational(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) t[i] += gram_inverse_[i][j] * b[j];
  Rational radius2 = 0;
  for (std::size_t i = 0; i < r; ++i) radius2 += t[i] * b[i];

  auto exact_ok = [&](const IntVec& c) {
    std::int64_t q = 0;
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t row = 0;
      for (std::size_t j = 0; j < r; ++j) row += gram_scaled_[i][j] * c[j];
      q += c[i] * (row + 2 * b[i]);
    }
    return q <= 0;
  };

  std::vector<IntVec> out;
  IntVec c(r, 0);
  // G = L D L^T; y_k = (c_k + t_k) + sum_{j>k} L[j][k] (c_j + t_j); sum D_k y_k^2 <= radius2.
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t k1, const Rational& rem) {
    const std::size_t k = k1 - 1;
    Rational shift = t[k];
    for (std::size_t j = k + 1; j < r; ++j) shift += ldl_.lower[j][k] * (c[j] + t[j]);
    const double half_width = std::sqrt(std::max(0.0, to_double(rem / ldl_.diag[k])));
    const double centre = -to_double(shift);
    const auto lo = static_cast<std::int64_t>(std::floor(centre - half_width)) - 2;
    const auto hi = static_cast<std::int64_t>(std::ceil(centre + half_width)) + 2;
    for (std::int64_t ck = lo; ck <= hi; ++ck) {
      Rational y = ck + shift;
      Rational left = rem - ldl_.diag[k] * y * y;
      if (left < 0) continue;
      c[k] = ck;
      if (k == 0) {
        if (exact_ok(c)) {
          out.push_back(c);
          if (out.size() > max_candidates_)
            throw std::runtime_error("candidate cap exceeded for " + to_string(lambda) + " on " +
                                     x_.name);
        }
      } else {
        descend(k, left);
      }
    }
    c[k] = 0;
  };
  descend(r, radius2);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t CohomologyEngine::candidate_box_radius(const Weight& lambda) const {
  require_pic(lambda);
  const auto& g = *x_.group;
  const std::size_t r = x_.rank();
  if (r == 0) return 0;
  const Weight v = lambda + g.rho();
  IntVec b(r);
  for (std::size_t i = 0; i < r; ++i) b[i] = g.scaled_inner_product(v, x_.spherical_roots[i]);
  std::vector<Rational> t(r, Rational(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) t[i] += gram_inverse_[i][j] * b[j];
  Rational radius2 = 0;
  for (std::size_t i = 0; i < r; ++i) radius2 += t[i] * b[i];
  std::int64_t best = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const double w = std::abs(to_double(t[i])) + std::sqrt(to_double(radius2 * gram_inverse_[i][i]));
    best = std::max(best, static_cast<std::int64_t>(std::ceil(w)) + 1);
  }
  return best;
}

std::vector<Weight> CohomologyEngine::enumerate_candidates(const Weight& lambda) const {
  std::vector<Weight> out;
  for (const auto& c : candidate_coefficients(lambda)) {
    Weight mu = lambda;
    for (std::size_t i = 0; i < c.size(); ++i) mu += c[i] * x_.spherical_roots[i];
    out.push_back(std::move(mu));
  }
  return out;
}

std::optional<Contribution> CohomologyEngine::contribution_at(const Weight& lambda,
                                                              const IntVec& coeffs) const {
  const auto& g = *x_.group;
  Weight mu = lambda;
  SubsetMask J = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    mu += coeffs[i] * x_.spherical_roots[i];
    if (coeffs[i] > 0) J |= SubsetMask{1} << i;
  }
  const Weight v = mu + g.rho();
  SubsetMask omega = 0;
  for (std::size_t i = 0; i < x_.rank(); ++i)
    if (g.scaled_inner_product(v, x_.spherical_roots[i]) < 0) omega |= SubsetMask{1} << i;
  if (omega != J) return std::nullopt;
  auto dom = g.make_dominant_shifted(mu);
  if (!dom) return std::nullopt;
  Contribution c;
  c.J = J;
  c.mu = std::move(mu);
  c.coeffs = coeffs;
  c.length = dom->length;
  c.mu_plus = std::move(dom->dominant);
  c.degree = c.length + popcount(J);
  return c;
}

std::vector<Contribution> CohomologyEngine::contributions(const Weight& lambda) const {
  std::vector<Contribution> out;
  for (const auto& c : candidate_coefficients(lambda))
    if (auto k = contribution_at(lambda, c)) out.push_back(std::move(*k));
  std::sort(out.begin(), out.end(), [](const Contribution& a, const Contribution& b) {
    return std::tie(a.degree, a.mu) < std::tie(b.degree, b.mu);
  });
  return out;
}

CohomologyTable aggregate(const RootSystem& g, const Weight& lambda,
                          std::vector<Contribution> contribs, bool keep_witnesses) {
  std::sort(contribs.begin(), contribs.end(), [](const Contribution& a, const Contribution& b) {
    return std::tie(a.degree, a.mu_plus, a.J, a.mu) < std::tie(b.degree, b.mu_plus, b.J, b.mu);
  });
  CohomologyTable table;
  table.lambda = lambda;
  for (auto& c : contribs) {
    if (table.groups.empty() || table.groups.back().degree != c.degree) {
      table.groups.push_back(DegreeGroup{c.degree, BigInt(0), {}});
    }
    auto& grp = table.groups.back();
    if (grp.constituents.empty() || grp.constituents.back().highest_weight != c.mu_plus) {
      grp.constituents.push_back(Constituent{c.mu_plus, 0, {}});
    }
    auto& con = grp.constituents.back();
    ++con.multiplicity;
    if (keep_witnesses) con.witnesses.push_back(std::move(c));
  }
  for (auto& grp : table.groups) {
    for (const auto& con : grp.constituents)
      grp.dimension += con.multiplicity * g.weyl_dimension(con.highest_weight);
  }
  return table;
}

CohomologyTable CohomologyEngine::table(const Weight& lambda, bool keep_witnesses) const {
  return aggregate(*x_.group, lambda, contributions(lambda), keep_witnesses);
}

Weight CohomologyEngine::serre_dual_weight(const Weight& lambda) const {
  require_pic(lambda);
  Weight out = -lambda - x_.two_rho_X;
  for (const auto& gm : x_.spherical_roots) out -= gm;
  if (!pic_contains(x_, out)) {
    throw ValidationError("Serre dual of " + to_string(lambda) + " leaves pic(" + x_.name + ")",
                          ValidationReport{});
  }
  return out;
}

SubsetMask omega_signature(const WonderfulVariety& x, const Weight& mu) {
  return CohomologyEngine(x).omega_signature(mu);
}

bool in_translated_R(const WonderfulVariety& x, const Weight& lambda, const Weight& mu,
                     SubsetMask J) {
  return CohomologyEngine(x).in_translated_R(lambda, mu, J);
}

std::vector<Weight> enumerate_candidates(const WonderfulVariety& x, const Weight& lambda) {
  return CohomologyEngine(x).enumerate_candidates(lambda);
}

std::vector<Contribution> contributions(const WonderfulVariety& x, const Weight& lambda) {
  return CohomologyEngine(x).contributions(lambda);
}

CohomologyTable cohomology_table(const WonderfulVariety& x, const Weight& lambda,
                                 bool keep_witnesses) {
  return CohomologyEngine(x).table(lambda, keep_witnesses);
}

Weight serre_dual_weight(const WonderfulVariety& x, const Weight& lambda) {
  return CohomologyEngine(x).serre_dual_weight(lambda);
}

}  // namespace wonderful
