#pragma once

// Slow, independent ground truth. Nothing here reuses the engine's candidate
// enumeration; agreement between the two is the point.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "wonderful/cohomology.hpp"

namespace wonderful {

using DegreeDimTable = std::map<int, BigInt>;

/// Borel-Weil-Bott on a flag variety (Sigma_X empty).
CohomologyTable bwb_direct(const WonderfulVariety& x, const Weight& lambda);

/// O(k) on P^m.
DegreeDimTable projective_space_cohomology(int m, std::int64_t k);

/// Dominant mu in lambda + sum Z_{<=0} gamma, by a bounded box scan; sorted.
std::vector<Weight> h0_dominant_scan(const WonderfulVariety& x, const Weight& lambda);

/// Nonzero degrees over all lambda with pic coordinates in [-box, box]^pic_rank.
std::set<int> vanishing_profile(const WonderfulVariety& x, std::int64_t box);

struct CheckResult {
  bool ok = true;
  std::string counterexample;
};

/// (J, mu) -> (Sigma \ J, -mu - 2 rho_X) maps contributions of lambda onto those of
/// lambda*, sending degree d to N - d; per-degree dimensions match accordingly.
CheckResult serre_involution_check(const CohomologyEngine& engine, const Weight& lambda);
CheckResult serre_involution_check(const WonderfulVariety& x, const Weight& lambda);

struct WeylElement {
  IntMatrix matrix;   // action on fundamental-weight coordinates
  int length = 0;
};

/// Full Weyl group by closure of simple reflections; total rank <= 3 only.
std::vector<WeylElement> weyl_group_bruteforce(const RootSystem& sys);

struct BruteDominant {
  Weight dominant;
  int length = 0;
};

/// Searches every element for w with w * lambda dominant; nullopt if lambda + rho is singular.
std::optional<BruteDominant> bruteforce_dominant_shifted(const RootSystem& sys,
                                                         const std::vector<WeylElement>& group,
                                                         const Weight& lambda);

}  // namespace wonderful
