#pragma once

// Degree restrictions for the symmetric cases. There l(mu) = c * l~(mu) where
// l~ counts restricted roots, and for mu in Omega_J
//   l~ >= |J|,  |restricted+| - l~ >= r - |J|,
//   l~ = 0 <=> J empty,  l~ = |restricted+| <=> J = Sigma.

#include <optional>
#include <set>
#include <string>

#include "wonderful/cohomology.hpp"

namespace wonderful {

std::set<int> allowed_degrees(const DivisibilityRule& rule);

struct RuleCheck {
  bool ok = true;
  std::string counterexample;
};

/// Every nonzero degree of the table is allowed by the rule.
RuleCheck check_table_against_rule(const CohomologyTable& table, const DivisibilityRule& rule);

/// Every witness length is divisible by the rule's modulus.
RuleCheck check_lengths_against_rule(const std::vector<Contribution>& contribs,
                                     const DivisibilityRule& rule);

/// Degrees in [0, N] left open by the published vanishing table for this family
/// (rank-1 entries: {0, N}). nullopt when nothing is tabulated.
std::optional<std::set<int>> tabulated_degrees(const WonderfulVariety& x);

}  // namespace wonderful
