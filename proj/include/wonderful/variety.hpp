#pragma once

// Descriptors of wonderful varieties of minimal rank: the group, the spherical
// roots, a basis of the Picard lattice (as weights at the base point) and the
// parabolic of the closed orbit. Every descriptor handed out by the catalog
// has passed validate().

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wonderful/weyl.hpp"

namespace wonderful {

/// s_gamma = s_alpha s_beta for positive roots alpha, beta (simple-root coords).
struct SGammaPair {
  IntVec alpha;
  IntVec beta;
  /// Expected s_gamma(rho) - rho as a multiple of gamma, when known.
  std::optional<std::int64_t> rho_shift_multiple;
};

/// l(mu) = modulus * (restricted length) for symmetric cases.
struct DivisibilityRule {
  std::string family;
  std::int64_t modulus = 1;
  std::int64_t restricted_positive_roots = 0;
  std::int64_t rank = 0;
};

struct WonderfulVariety {
  std::string name;
  std::shared_ptr<const RootSystem> group;
  std::vector<Weight> spherical_roots;
  std::vector<Weight> pic_basis;
  std::vector<std::size_t> q_simple_roots;   // 0-based
  Weight two_rho_X;
  int dimension_N = 0;
  std::optional<std::vector<SGammaPair>> sgamma;
  std::optional<DivisibilityRule> divisibility;

  // Reference values the validator compares against, when the source fixes them.
  std::optional<int> expected_N;
  std::optional<IntVec> expected_lambda_zero;   // pic coordinates

  std::size_t rank() const { return spherical_roots.size(); }
  std::size_t pic_rank() const { return pic_basis.size(); }
  bool is_flag() const { return spherical_roots.empty(); }
  /// Weight with the given coordinates in pic_basis.
  Weight pic_weight(std::span<const std::int64_t> coords) const;
};

/// Recomputes dimension_N and two_rho_X from group, q_simple_roots and r.
void derive_invariants(WonderfulVariety& x);

WonderfulVariety flag_variety(std::shared_ptr<const RootSystem> group,
                              std::vector<std::size_t> q_simple_roots, std::string name = {});
WonderfulVariety group_compactification(DynkinComponent k);

/// PSO/PSO(n), Q(n), SO7/G2, Q7:B3, PGL/PSp(n), E6/F4, group:<type>, flag:<type>[:i,j,..].
WonderfulVariety build_case(const std::string& name);
/// Names of the standard catalog, in listing order.
std::vector<std::string> catalog_names();
/// Catalog entries of rank <= 2 drawn as region figures.
std::vector<std::string> figure_case_names();

/// Pic coordinates of lambda, or nullopt when lambda is not in pic(X).
std::optional<IntVec> pic_contains(const WonderfulVariety& x, const Weight& lambda);
/// Coordinates of lambda in the spherical-root basis (integral), if any.
std::optional<IntVec> spherical_expansion(const WonderfulVariety& x, const Weight& lambda);

/// Pic coordinates of lambda_0 = -sum_i ((rho,gamma_i)/(w_i,gamma_i) + 1) w_i.
/// Throws InvalidInput unless r in {1,2} with diagonal positive pairing and
/// integral coefficients.
IntVec lambda_zero_coords(const WonderfulVariety& x);
Weight lambda_zero(const WonderfulVariety& x);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
  std::vector<std::string> failures() const;
};

ValidationReport validate(const WonderfulVariety& x);

class ValidationError : public std::runtime_error {
public:
  ValidationError(const std::string& what, ValidationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

private:
  ValidationReport report_;
};

/// Throws ValidationError if validate(x) has a failing check.
void require_valid(const WonderfulVariety& x);

}  // namespace wonderful
