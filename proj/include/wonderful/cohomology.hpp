#pragma once

// Line-bundle cohomology on wonderful varieties of minimal rank.
//
//   H^d(X, L_lambda) = sum over J subset Sigma_X, mu in (lambda + R_J) cap Omega_J,
//                      mu + rho regular, l(mu) + |J| = d, of L(mu^+)
//
// with R_J = sum_{J} Z_{>0} gamma + sum_{not J} Z_{<=0} gamma and
// Omega_J = { mu in pic : {gamma : (mu + rho, gamma) < 0} = J }.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wonderful/exact_linalg.hpp"
#include "wonderful/variety.hpp"

namespace wonderful {

/// Subset of spherical-root indices, bit i set iff gamma_{i+1} in J.
using SubsetMask = std::uint32_t;

int popcount(SubsetMask m);
std::vector<int> subset_indices(SubsetMask m);   // 1-based, as printed

struct Contribution {
  SubsetMask J = 0;
  Weight mu;
  IntVec coeffs;         // mu - lambda = sum coeffs_i gamma_i
  int length = 0;        // l(mu)
  Weight mu_plus;
  int degree = 0;        // l(mu) + |J|
};

struct Constituent {
  Weight highest_weight;
  std::int64_t multiplicity = 0;
  std::vector<Contribution> witnesses;
};

struct DegreeGroup {
  int degree = 0;
  BigInt dimension;
  std::vector<Constituent> constituents;
};

struct CohomologyTable {
  Weight lambda;
  std::vector<DegreeGroup> groups;   // nonzero degrees only, increasing

  std::vector<int> degrees() const;
  BigInt dimension(int degree) const;
  const DegreeGroup* group(int degree) const;
  bool empty() const { return groups.empty(); }
};

/// Precomputed quadratic-form data for one variety; reuse it across many lambdas.
class CohomologyEngine {
public:
  explicit CohomologyEngine(const WonderfulVariety& x, std::size_t max_candidates = 2'000'000);

  const WonderfulVariety& variety() const { return x_; }

  /// {i : (mu + rho, gamma_i) < 0}. Throws InvalidInput when mu is not in pic.
  SubsetMask omega_signature(const Weight& mu) const;
  /// mu - lambda in Z Sigma with coefficients > 0 on J and <= 0 off J.
  bool in_translated_R(const Weight& lambda, const Weight& mu, SubsetMask J) const;

  /// All mu in lambda + Z Sigma with |mu + rho|^2 <= |lambda + rho|^2.
  std::vector<Weight> enumerate_candidates(const Weight& lambda) const;
  /// Coefficient vectors of the same set, in the same order.
  std::vector<IntVec> candidate_coefficients(const Weight& lambda) const;
  /// Every candidate coefficient satisfies |c_i| <= this bound.
  std::int64_t candidate_box_radius(const Weight& lambda) const;

  std::vector<Contribution> contributions(const Weight& lambda) const;
  CohomologyTable table(const Weight& lambda, bool keep_witnesses = true) const;

  /// lambda* = -lambda - 2 rho_X - sum(Sigma).
  Weight serre_dual_weight(const Weight& lambda) const;

  /// Builds the contribution for mu - lambda = coeffs if it is one.
  std::optional<Contribution> contribution_at(const Weight& lambda, const IntVec& coeffs) const;

  void require_pic(const Weight& lambda) const;

private:
  WonderfulVariety x_;
  std::size_t max_candidates_;
  IntMatrix gram_scaled_;          // s * (gamma_i, gamma_j)
  LdlFactor ldl_;                  // of the rational Gram matrix
  RationalMatrix gram_inverse_;
};

// Free-function forms. Each builds a CohomologyEngine.
SubsetMask omega_signature(const WonderfulVariety& x, const Weight& mu);
bool in_translated_R(const WonderfulVariety& x, const Weight& lambda, const Weight& mu,
                     SubsetMask J);
std::vector<Weight> enumerate_candidates(const WonderfulVariety& x, const Weight& lambda);
std::vector<Contribution> contributions(const WonderfulVariety& x, const Weight& lambda);
CohomologyTable cohomology_table(const WonderfulVariety& x, const Weight& lambda,
                                 bool keep_witnesses = true);
Weight serre_dual_weight(const WonderfulVariety& x, const Weight& lambda);

/// Groups contributions by (degree, mu^+) in canonical order. Order of the input
/// does not matter, so per-J partial lists can be concatenated before calling.
CohomologyTable aggregate(const RootSystem& g, const Weight& lambda,
                          std::vector<Contribution> contribs, bool keep_witnesses = true);

}  // namespace wonderful
