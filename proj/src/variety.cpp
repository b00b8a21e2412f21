#include "wonderful/variety.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "wonderful/exact_linalg.hpp"

namespace wonderful {

Weight WonderfulVariety::pic_weight(std::span<const std::int64_t> coords) const {
  if (coords.size() != pic_basis.size()) {
    throw InvalidInput("expected " + std::to_string(pic_basis.size()) + " pic coordinates, got " +
                       std::to_string(coords.size()));
  }
  Weight w = Weight::zero(group->rank());
  for (std::size_t i = 0; i < coords.size(); ++i) w += coords[i] * pic_basis[i];
  return w;
}

namespace {

bool support_in(const IntVec& root, const std::vector<std::size_t>& q) {
  for (std::size_t j = 0; j < root.size(); ++j)
    if (root[j] != 0 && std::find(q.begin(), q.end(), j) == q.end()) return false;
  return true;
}

std::vector<IntVec> coords_of(const std::vector<Weight>& ws) {
  std::vector<IntVec> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(w.coords());
  return out;
}

RationalMatrix pairing_matrix(const RootSystem& g, const std::vector<Weight>& a,
                              const std::vector<Weight>& b) {
  RationalMatrix m(a.size(), std::vector<Rational>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m[i][j] = g.inner_product(a[i], b[j]);
  return m;
}

std::shared_ptr<const RootSystem> make_group(std::vector<DynkinComponent> comps) {
  return std::make_shared<const RootSystem>(std::move(comps));
}

std::int64_t classical_dimension(const DynkinComponent& k) {
  const std::int64_t n = k.rank;
  switch (k.family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

// Spin(2n) acting on P^{2n-1} (projective = true) or on the quadric Q_{2n-1}.
WonderfulVariety orthogonal_rank_one(int n, bool projective) {
  if (n < 2) throw InvalidInput("PSO/PSO(n) and Q(n) need n >= 2");
  WonderfulVariety x;
  std::ostringstream nm;
  nm << (projective ? "PSO/PSO(" : "Q(") << n << ')';
  x.name = nm.str();
  SGammaPair pair;
  if (n == 2) {
    x.group = make_group({{Family::A, 1}, {Family::A, 1}});
    pair.alpha = {1, 0};
    pair.beta = {0, 1};
  } else {
    x.group = make_group({{Family::D, n}});
    pair.alpha.assign(n, 0);
    pair.beta.assign(n, 0);
    for (int i = 0; i < n - 1; ++i) pair.alpha[i] = 1;
    for (int i = 0; i < n - 2; ++i) pair.beta[i] = 1;
    pair.beta[n - 1] = 1;
    for (int i = 1; i < n; ++i) x.q_simple_roots.push_back(static_cast<std::size_t>(i));
  }
  const auto& g = *x.group;
  Weight sum = g.root_as_weight(pair.alpha) + g.root_as_weight(pair.beta);
  Weight gamma = sum;
  if (!projective) {
    for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] /= 2;
  }
  x.spherical_roots = {gamma};
  if (n == 2) {
    x.pic_basis = {Weight(IntVec{1, 1})};
  } else {
    x.pic_basis = {g.fundamental_weight(0)};
  }
  pair.rho_shift_multiple = projective ? 1 - n : 2 - 2 * n;
  x.sgamma = std::vector<SGammaPair>{pair};
  x.expected_N = 2 * n - 1;
  if (projective) {
    x.expected_lambda_zero = IntVec{-n};
    x.divisibility = DivisibilityRule{"PSO/PSO", 2 * n - 2, 1, 1};
  }
  derive_invariants(x);
  return x;
}

// Spin(7) acting on P^7 through the spin representation, or on Q_7.
WonderfulVariety spin7_rank_one(bool projective) {
  WonderfulVariety x;
  x.name = projective ? "SO7/G2" : "Q7:B3";
  x.group = make_group({{Family::B, 3}});
  const auto& g = *x.group;
  x.q_simple_roots = {0, 1};
  SGammaPair pair{{1, 1, 2}, {0, 1, 1}, projective ? -3 : -6};
  Weight gamma = g.root_as_weight(pair.alpha) + g.root_as_weight(pair.beta);
  if (!projective)
    for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] /= 2;
  x.spherical_roots = {gamma};
  x.pic_basis = {g.fundamental_weight(2)};
  x.sgamma = std::vector<SGammaPair>{pair};
  x.expected_N = 7;
  if (projective) x.expected_lambda_zero = IntVec{-4};
  derive_invariants(x);
  return x;
}

// SL(2n) with the symplectic involution; compact simple roots are the odd ones.
WonderfulVariety pgl_psp(int n) {
  if (n < 2) throw InvalidInput("PGL/PSp(n) needs n >= 2");
  WonderfulVariety x;
  x.name = "PGL/PSp(" + std::to_string(n) + ")";
  const int rank = 2 * n - 1;
  x.group = make_group({{Family::A, rank}});
  for (int i = 0; i < rank; i += 2) x.q_simple_roots.push_back(static_cast<std::size_t>(i));
  // gamma_i = alpha_{2i-1} + 2 alpha_{2i} + alpha_{2i+1} = 2 w_{2i} - w_{2i-2} - w_{2i+2}
  for (int i = 1; i <= n - 1; ++i) {
    IntVec c(rank, 0);
    c[2 * i - 1] = 2;
    if (2 * i - 2 >= 1) c[2 * i - 3] = -1;
    if (2 * i + 2 <= rank) c[2 * i + 1] = -1;
    x.spherical_roots.emplace_back(std::move(c));
    x.pic_basis.push_back(x.group->fundamental_weight(static_cast<std::size_t>(2 * i - 1)));
  }
  x.expected_N = 2 * n * n - n - 1;
  if (n <= 3) x.expected_lambda_zero = IntVec(static_cast<std::size_t>(n - 1), -3);
  x.divisibility =
      DivisibilityRule{"PGL/PSp", 4, static_cast<std::int64_t>(n) * (n - 1) / 2, n - 1};
  derive_invariants(x);
  return x;
}

// E6 with the involution of type EIV; compact roots alpha_2..alpha_5 (Bourbaki).
WonderfulVariety e6_f4() {
  WonderfulVariety x;
  x.name = "E6/F4";
  x.group = make_group({{Family::E, 6}});
  x.q_simple_roots = {1, 2, 3, 4};
  x.spherical_roots = {Weight(IntVec{2, 0, 0, 0, 0, -1}), Weight(IntVec{-1, 0, 0, 0, 0, 2})};
  x.pic_basis = {x.group->fundamental_weight(0), x.group->fundamental_weight(5)};
  x.expected_N = 26;
  x.expected_lambda_zero = IntVec{-5, -5};
  x.divisibility = DivisibilityRule{"E6/F4", 8, 3, 2};
  derive_invariants(x);
  return x;
}

}  // namespace

void derive_invariants(WonderfulVariety& x) {
  const auto& g = *x.group;
  for (auto q : x.q_simple_roots)
    if (q >= g.rank()) throw InvalidInput("q_simple_roots index out of range");
  std::size_t in_q = 0;
  Weight two_rho = Weight::zero(g.rank());
  for (std::size_t k = 0; k < g.num_positive_roots(); ++k) {
    if (support_in(g.positive_roots()[k], x.q_simple_roots)) {
      ++in_q;
    } else {
      two_rho += g.positive_root_weight(k);
    }
  }
  x.two_rho_X = two_rho;
  x.dimension_N = static_cast<int>(g.num_positive_roots() - in_q + x.spherical_roots.size());
}

WonderfulVariety flag_variety(std::shared_ptr<const RootSystem> group,
                              std::vector<std::size_t> q_simple_roots, std::string name) {
  WonderfulVariety x;
  x.group = std::move(group);
  std::sort(q_simple_roots.begin(), q_simple_roots.end());
  q_simple_roots.erase(std::unique(q_simple_roots.begin(), q_simple_roots.end()),
                       q_simple_roots.end());
  x.q_simple_roots = std::move(q_simple_roots);
  for (std::size_t i = 0; i < x.group->rank(); ++i)
    if (!std::binary_search(x.q_simple_roots.begin(), x.q_simple_roots.end(), i))
      x.pic_basis.push_back(x.group->fundamental_weight(i));
  if (name.empty()) {
    name = "flag:" + to_string(x.group->components());
    if (!x.q_simple_roots.empty()) {
      name += ':';
      for (std::size_t i = 0; i < x.q_simple_roots.size(); ++i) {
        if (i) name += ',';
        name += std::to_string(x.q_simple_roots[i] + 1);
      }
    }
  }
  x.name = std::move(name);
  derive_invariants(x);
  return x;
}

WonderfulVariety group_compactification(DynkinComponent k) {
  WonderfulVariety x;
  x.name = "group:" + to_string(std::span<const DynkinComponent>(&k, 1));
  x.group = make_group({k, k});
  const auto& g = *x.group;
  const std::size_t r = static_cast<std::size_t>(k.rank);
  // gamma_i = alpha_i - theta(alpha_i); in the positive system of B x B^- this is
  // the sum of the i-th simple roots of both factors, and pic is spanned by (w_i, w_i).
  for (std::size_t i = 0; i < r; ++i) {
    x.spherical_roots.push_back(g.simple_root_weight(i) + g.simple_root_weight(r + i));
    x.pic_basis.push_back(g.fundamental_weight(i) + g.fundamental_weight(r + i));
  }
  x.expected_N = static_cast<int>(classical_dimension(k));
  if (k.family == Family::A && k.rank <= 2) x.expected_lambda_zero = IntVec(r, -2);
  RootSystem factor({k});
  x.divisibility = DivisibilityRule{"group", 2,
                                    static_cast<std::int64_t>(factor.num_positive_roots()),
                                    static_cast<std::int64_t>(r)};
  derive_invariants(x);
  return x;
}

namespace {

WonderfulVariety build_unchecked(const std::string& name) {
  std::smatch m;
  static const std::regex pso(R"(PSO/PSO\((\d+)\))");
  static const std::regex quad(R"(Q\((\d+)\))");
  static const std::regex pgl(R"(PGL/PSp\((\d+)\))");
  static const std::regex grp(R"(group:([A-Ga-g]\d+))");
  static const std::regex flag(R"(flag:([A-Ga-g0-9xX*]+)(?::([0-9,]*))?)");
  if (std::regex_match(name, m, pso)) return orthogonal_rank_one(std::stoi(m[1]), true);
  if (std::regex_match(name, m, quad)) return orthogonal_rank_one(std::stoi(m[1]), false);
  if (std::regex_match(name, m, pgl)) return pgl_psp(std::stoi(m[1]));
  if (name == "SO7/G2") return spin7_rank_one(true);
  if (name == "Q7:B3") return spin7_rank_one(false);
  if (name == "E6/F4") return e6_f4();
  if (std::regex_match(name, m, grp)) {
    auto comps = parse_dynkin(m[1]);
    if (comps.size() != 1) throw InvalidInput("group compactification needs a simple type");
    return group_compactification(comps.front());
  }
  if (std::regex_match(name, m, flag)) {
    auto group = make_group(parse_dynkin(m[1]));
    std::vector<std::size_t> q;
    if (m[2].matched && m[2].length() > 0) {
      std::stringstream ss(m[2]);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw InvalidInput("empty index in '" + name + "'");
        int idx = std::stoi(tok);
        if (idx < 1 || static_cast<std::size_t>(idx) > group->rank())
          throw InvalidInput("white node " + tok + " out of range in '" + name + "'");
        q.push_back(static_cast<std::size_t>(idx - 1));
      }
    }
    return flag_variety(std::move(group), std::move(q));
  }
  throw InvalidInput("unknown variety '" + name + "'");
}

}  // namespace

WonderfulVariety build_case(const std::string& name) {
  WonderfulVariety x = build_unchecked(name);
  require_valid(x);
  return x;
}

std::vector<std::string> catalog_names() {
  return {"flag:A1",      "flag:A2",     "flag:B2",     "flag:A1xA1",  "flag:A2:2",
          "flag:G2",      "PSO/PSO(2)",  "PSO/PSO(3)",  "PSO/PSO(4)",  "Q(2)",
          "Q(3)",         "Q(4)",        "SO7/G2",      "Q7:B3",       "group:A1",
          "group:A2",     "group:B2",    "group:G2",    "PGL/PSp(2)",  "PGL/PSp(3)",
          "E6/F4"};
}

std::vector<std::string> figure_case_names() {
  return {"PSO/PSO(2)", "PSO/PSO(3)", "PSO/PSO(4)", "SO7/G2", "group:A2", "PGL/PSp(3)", "E6/F4"};
}

std::optional<IntVec> pic_contains(const WonderfulVariety& x, const Weight& lambda) {
  x.group->check_weight(lambda);
  return solve_in_span_integral(coords_of(x.pic_basis), lambda.coords());
}

std::optional<IntVec> spherical_expansion(const WonderfulVariety& x, const Weight& lambda) {
  x.group->check_weight(lambda);
  return solve_in_span_integral(coords_of(x.spherical_roots), lambda.coords());
}

IntVec lambda_zero_coords(const WonderfulVariety& x) {
  const auto& g = *x.group;
  const std::size_t r = x.rank();
  if (r < 1 || r > 2) throw InvalidInput("lambda_0 is defined for rank 1 or 2 only");
  if (x.pic_rank() != r) throw InvalidInput("lambda_0 needs a pic basis of size r");
  auto pm = pairing_matrix(g, x.pic_basis, x.spherical_roots);
  IntVec out(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i != j && pm[i][j] != 0) throw InvalidInput("pairing (w_i, gamma_j) is not diagonal");
    }
    if (pm[i][i] <= 0) throw InvalidInput("pairing (w_i, gamma_i) is not positive");
    Rational c = g.inner_product(g.rho(), x.spherical_roots[i]) / pm[i][i] + 1;
    if (boost::multiprecision::denominator(c) != 1)
      throw InvalidInput("lambda_0 coefficient is not integral");
    out[i] = -static_cast<std::int64_t>(boost::multiprecision::numerator(c));
  }
  return out;
}

Weight lambda_zero(const WonderfulVariety& x) { return x.pic_weight(lambda_zero_coords(x)); }

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name + ": " + c.detail);
  return out;
}

ValidationReport validate(const WonderfulVariety& x) {
  ValidationReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const auto& g = *x.group;
  const std::size_t r = x.rank();

  bool shapes = true;
  for (const auto& w : x.spherical_roots) shapes = shapes && w.size() == g.rank();
  for (const auto& w : x.pic_basis) shapes = shapes && w.size() == g.rank();
  for (auto q : x.q_simple_roots) shapes = shapes && q < g.rank();
  add("shapes", shapes, shapes ? "" : "vector lengths or indices disagree with the group rank");
  if (!shapes) return rep;

  auto gram = pairing_matrix(g, x.spherical_roots, x.spherical_roots);
  add("spherical_gram_positive_definite", is_positive_definite(gram));

  const bool pic_indep = matrix_rank(coords_of(x.pic_basis)) == x.pic_rank();
  add("pic_basis_independent", pic_indep);

  {
    bool ok = true;
    std::string bad;
    if (r > 0 && matrix_rank(coords_of(x.spherical_roots)) == r) {
      for (std::size_t k = 0; k < g.num_positive_roots(); ++k) {
        if (solve_in_span(coords_of(x.spherical_roots), g.positive_root_weight(k).coords())) {
          ok = false;
          bad = "root " + to_string(Weight(g.positive_roots()[k])) + " lies in span(Sigma)";
          break;
        }
      }
    } else if (r > 0) {
      ok = false;
      bad = "spherical roots are dependent";
    }
    add("no_root_in_spherical_span", ok, bad);
  }

  {
    bool ok = pic_indep;
    std::string bad;
    for (std::size_t i = 0; ok && i < r; ++i) {
      if (!pic_contains(x, x.spherical_roots[i])) {
        ok = false;
        bad = "gamma_" + std::to_string(i + 1) + " not in pic";
      }
    }
    add("spherical_roots_in_pic", ok, bad);
  }

  {
    bool ok = true;
    for (const auto& w : x.pic_basis)
      for (auto q : x.q_simple_roots) ok = ok && w[q] == 0;
    add("pic_is_character_of_Q", ok);
  }

  {
    std::size_t in_q = 0;
    Weight two_rho = Weight::zero(g.rank());
    for (std::size_t k = 0; k < g.num_positive_roots(); ++k) {
      const auto& root = g.positive_roots()[k];
      bool inside = true;
      for (std::size_t j = 0; j < root.size(); ++j)
        if (root[j] != 0 && std::find(x.q_simple_roots.begin(), x.q_simple_roots.end(), j) ==
                                x.q_simple_roots.end())
          inside = false;
      if (inside) ++in_q; else two_rho += g.positive_root_weight(k);
    }
    const int n = static_cast<int>(g.num_positive_roots() - in_q + r);
    add("dimension_formula", n == x.dimension_N,
        "N = " + std::to_string(x.dimension_N) + ", recomputed " + std::to_string(n));
    add("two_rho_X", two_rho == x.two_rho_X, to_string(x.two_rho_X));
    if (x.expected_N) {
      add("dimension_matches_reference", *x.expected_N == x.dimension_N,
          "expected " + std::to_string(*x.expected_N) + ", got " + std::to_string(x.dimension_N));
    }
  }

  if (pic_indep) {
    Weight shift = x.two_rho_X;
    for (const auto& gm : x.spherical_roots) shift += gm;
    add("serre_shift_in_pic", pic_contains(x, shift).has_value(),
        "2rho_X + sum(Sigma) = " + to_string(shift));
  }

  if (x.sgamma) {
    bool ok = x.sgamma->size() == r;
    std::string bad = ok ? "" : "one pair per spherical root expected";
    const Weight rho = g.rho();
    for (std::size_t i = 0; ok && i < r; ++i) {
      const auto& p = (*x.sgamma)[i];
      auto is_pos_root = [&](const IntVec& v) {
        return std::find(g.positive_roots().begin(), g.positive_roots().end(), v) !=
               g.positive_roots().end();
      };
      if (!is_pos_root(p.alpha) || !is_pos_root(p.beta)) {
        ok = false;
        bad = "alpha or beta is not a positive root";
        break;
      }
      const Weight a = g.root_as_weight(p.alpha);
      const Weight b = g.root_as_weight(p.beta);
      if (g.pair_coroot(a, p.beta) != 0) {
        ok = false;
        bad = "<alpha, beta^vee> != 0";
        break;
      }
      const Weight sum = a + b;
      const Weight& gm = x.spherical_roots[i];
      // alpha + beta = m * gamma with m a positive integer
      std::int64_t m = 0;
      for (std::size_t j = 0; j < gm.size(); ++j)
        if (gm[j] != 0) { m = sum[j] / gm[j]; break; }
      if (m <= 0 || !(sum == m * gm)) {
        ok = false;
        bad = "alpha + beta is not a positive multiple of gamma";
        break;
      }
      if (g.pair_coroot(rho, p.alpha) != g.pair_coroot(rho, p.beta)) {
        ok = false;
        bad = "<rho, alpha^vee> != <rho, beta^vee>";
        break;
      }
      for (const auto& w : x.pic_basis) {
        if (g.pair_coroot(w, p.alpha) != g.pair_coroot(w, p.beta)) {
          ok = false;
          bad = "<w, alpha^vee> != <w, beta^vee> for a pic generator";
        }
      }
      const Weight shifted = g.reflect_root(g.reflect_root(rho, p.beta), p.alpha) - rho;
      auto k = spherical_expansion(x, shifted);
      if (!k) {
        ok = false;
        bad = "s_gamma rho - rho not in Z Sigma";
        break;
      }
      if (p.rho_shift_multiple && (*k)[i] != *p.rho_shift_multiple) {
        ok = false;
        bad = "s_gamma rho - rho = " + std::to_string((*k)[i]) + " gamma, expected " +
              std::to_string(*p.rho_shift_multiple) + " gamma";
      }
    }
    add("sgamma_data", ok, bad);
  }

  if ((r == 1 || r == 2) && x.pic_rank() == r) {
    try {
      IntVec l0 = lambda_zero_coords(x);
      std::string got = to_string(Weight(l0));
      bool ok = !x.expected_lambda_zero || *x.expected_lambda_zero == l0;
      add("lambda_zero", ok,
          x.expected_lambda_zero ? "got " + got + ", expected " + to_string(Weight(*x.expected_lambda_zero))
                                 : got);
    } catch (const InvalidInput& e) {
      add("lambda_zero", false, e.what());
    }
  } else if (x.expected_lambda_zero) {
    add("lambda_zero", false, "reference value given but lambda_0 is undefined here");
  }

  if (x.divisibility) {
    const auto& d = *x.divisibility;
    const bool ok = d.rank == static_cast<std::int64_t>(r) &&
                    d.modulus * d.restricted_positive_roots + d.rank == x.dimension_N;
    add("divisibility_constants", ok,
        "c*|restricted roots| + r = " +
            std::to_string(d.modulus * d.restricted_positive_roots + d.rank));
  }
  return rep;
}

void require_valid(const WonderfulVariety& x) {
  ValidationReport rep = validate(x);
  if (!rep.all_passed()) {
    std::string msg = "variety '" + x.name + "' failed validation:";
    for (const auto& f : rep.failures()) msg += "\n  " + f;
    throw ValidationError(msg, std::move(rep));
  }
}

}  // namespace wonderful
