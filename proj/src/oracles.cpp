#include "wonderful/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace wonderful {

CohomologyTable bwb_direct(const WonderfulVariety& x, const Weight& lambda) {
  if (!x.is_flag()) throw InvalidInput("bwb_direct needs a flag variety, got " + x.name);
  const auto& g = *x.group;
  g.check_weight(lambda);
  CohomologyTable t;
  t.lambda = lambda;
  auto dom = g.make_dominant_shifted(lambda);
  if (!dom) return t;
  Contribution c;
  c.mu = lambda;
  c.length = dom->length;
  c.mu_plus = dom->dominant;
  c.degree = dom->length;
  DegreeGroup grp{dom->length, g.weyl_dimension(dom->dominant), {}};
  grp.constituents.push_back(Constituent{dom->dominant, 1, {c}});
  t.groups.push_back(std::move(grp));
  return t;
}

namespace {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

DegreeDimTable projective_space_cohomology(int m, std::int64_t k) {
  if (m < 1) throw InvalidInput("projective space needs m >= 1");
  DegreeDimTable t;
  if (k >= 0) t[0] = binomial(m + k, m);
  if (k <= -m - 1) t[m] = binomial(-k - 1, m);
  return t;
}

std::vector<Weight> h0_dominant_scan(const WonderfulVariety& x, const Weight& lambda) {
  const auto& g = *x.group;
  if (!pic_contains(x, lambda)) throw InvalidInput("h0_dominant_scan: lambda not in pic");
  const std::size_t r = x.rank();
  if (r == 0) {
    if (g.is_dominant(lambda)) return {lambda};
    return {};
  }
  // For dominant mu below lambda, |mu| <= |lambda|, so |sum n_i gamma_i| <= 2 |lambda|
  // and n_i <= 2 |lambda| sqrt((G^{-1})_ii).
  RationalMatrix gram(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      gram[i][j] = g.inner_product(x.spherical_roots[i], x.spherical_roots[j]);
  const RationalMatrix ginv = inverse(gram);
  const double norm2 = g.inner_product(lambda, lambda).convert_to<double>();
  IntVec bound(r);
  for (std::size_t i = 0; i < r; ++i)
    bound[i] = static_cast<std::int64_t>(
                   std::ceil(2.0 * std::sqrt(norm2 * ginv[i][i].convert_to<double>()))) + 1;

  std::vector<Weight> out;
  IntVec n(r, 0);
  for (;;) {
    Weight mu = lambda;
    for (std::size_t i = 0; i < r; ++i) mu -= n[i] * x.spherical_roots[i];
    if (g.is_dominant(mu)) out.push_back(mu);
    std::size_t i = 0;
    while (i < r && n[i] == bound[i]) n[i++] = 0;
    if (i == r) break;
    ++n[i];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<int> vanishing_profile(const WonderfulVariety& x, std::int64_t box) {
  CohomologyEngine engine(x);
  std::set<int> degrees;
  const std::size_t p = x.pic_rank();
  IntVec c(p, -box);
  for (;;) {
    for (int d : engine.table(x.pic_weight(c), false).degrees()) degrees.insert(d);
    std::size_t i = 0;
    while (i < p && c[i] == box) c[i++] = -box;
    if (i == p) break;
    ++c[i];
  }
  return degrees;
}

CheckResult serre_involution_check(const CohomologyEngine& engine, const Weight& lambda) {
  const auto& x = engine.variety();
  const SubsetMask full = x.rank() == 0 ? 0 : (SubsetMask{1} << x.rank()) - 1;
  const Weight dual = engine.serre_dual_weight(lambda);
  const auto here = engine.contributions(lambda);
  const auto there = engine.contributions(dual);
  CheckResult res;
  auto fail = [&](const std::string& why) {
    res.ok = false;
    std::ostringstream os;
    os << x.name << " lambda=" << to_string(lambda) << " dual=" << to_string(dual) << ": " << why;
    res.counterexample = os.str();
    return res;
  };
  if (here.size() != there.size()) {
    return fail(std::to_string(here.size()) + " witnesses vs " + std::to_string(there.size()));
  }
  std::vector<std::tuple<SubsetMask, Weight, int>> image, target;
  for (const auto& c : here)
    image.emplace_back(full & ~c.J, -c.mu - x.two_rho_X, x.dimension_N - c.degree);
  for (const auto& c : there) target.emplace_back(c.J, c.mu, c.degree);
  std::sort(image.begin(), image.end());
  std::sort(target.begin(), target.end());
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] != target[i]) {
      return fail("witness " + to_string(std::get<1>(image[i])) + " (degree " +
                  std::to_string(std::get<2>(image[i])) + ") has no partner");
    }
  }
  const auto ta = aggregate(*x.group, lambda, here, false);
  const auto tb = aggregate(*x.group, dual, there, false);
  for (int d = 0; d <= x.dimension_N; ++d) {
    if (ta.dimension(d) != tb.dimension(x.dimension_N - d)) {
      return fail("dim H^" + std::to_string(d) + " = " + ta.dimension(d).str() + " but dual has " +
                  tb.dimension(x.dimension_N - d).str());
    }
  }
  return res;
}

CheckResult serre_involution_check(const WonderfulVariety& x, const Weight& lambda) {
  return serre_involution_check(CohomologyEngine(x), lambda);
}

namespace {

IntMatrix simple_reflection_matrix(const RootSystem& sys, std::size_t i) {
  const std::size_t n = sys.rank();
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t k = 0; k < n; ++k) m[k][k] = 1;
  // s_i(x) = x - x_i * alpha_i, alpha_i = column i of the Cartan matrix
  for (std::size_t k = 0; k < n; ++k) m[k][i] -= sys.cartan()[k][i];
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Weight apply(const IntMatrix& m, const Weight& v) {
  IntVec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return Weight(std::move(out));
}

}  // namespace

std::vector<WeylElement> weyl_group_bruteforce(const RootSystem& sys) {
  if (sys.rank() > 3) throw InvalidInput("weyl_group_bruteforce is limited to rank <= 3");
  const std::size_t n = sys.rank();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(simple_reflection_matrix(sys, i));
  IntMatrix id(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  std::map<IntMatrix, int> seen{{id, 0}};
  std::vector<WeylElement> out{{id, 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      IntMatrix next = multiply(s, out[cur].matrix);
      if (seen.count(next)) continue;
      const int len = out[cur].length + 1;
      seen.emplace(next, len);
      out.push_back({std::move(next), len});
      queue.push_back(out.size() - 1);
    }
  }
  return out;
}

std::optional<BruteDominant> bruteforce_dominant_shifted(const RootSystem& sys,
                                                         const std::vector<WeylElement>& group,
                                                         const Weight& lambda) {
  const Weight rho = sys.rho();
  const Weight v = lambda + rho;
  std::optional<BruteDominant> best;
  for (const auto& w : group) {
    const Weight img = apply(w.matrix, v);
    if (!sys.is_dominant(img)) continue;
    for (std::size_t i = 0; i < img.size(); ++i)
      if (img[i] == 0) return std::nullopt;
    if (!best || w.length < best->length) best = BruteDominant{img - rho, w.length};
  }
  return best;
}

}  // namespace wonderful
