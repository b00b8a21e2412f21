#include "wonderful/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace wonderful {

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw InvalidInput("weight rank mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw InvalidInput("weight rank mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight& Weight::operator*=(std::int64_t k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ']';
  return os.str();
}

std::vector<DynkinComponent> parse_dynkin(const std::string& text) {
  std::vector<DynkinComponent> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (std::string("ABCDEFG").find(f) == std::string::npos)
      throw InvalidInput("bad Dynkin type '" + text + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw InvalidInput("missing rank in Dynkin type '" + text + "'");
    int rank = std::stoi(text.substr(start, pos - start));
    out.push_back({static_cast<Family>(f), rank});
    if (pos < text.size()) {
      if (text[pos] != 'x' && text[pos] != 'X' && text[pos] != '*')
        throw InvalidInput("bad separator in Dynkin type '" + text + "'");
      ++pos;
      if (pos == text.size()) throw InvalidInput("trailing separator in '" + text + "'");
    }
  }
  if (out.empty()) throw InvalidInput("empty Dynkin type");
  return out;
}

std::string to_string(std::span<const DynkinComponent> comps) {
  std::string s;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) s += 'x';
    s += static_cast<char>(comps[i].family);
    s += std::to_string(comps[i].rank);
  }
  return s;
}

namespace {

void validate_component(const DynkinComponent& c) {
  const int n = c.rank;
  bool ok = false;
  switch (c.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) {
    throw InvalidInput(std::string("invalid Dynkin type ") + static_cast<char>(c.family) +
                       std::to_string(n));
  }
}

// Block for one simple component, Bourbaki numbering, entry [i][j] = <alpha_j, alpha_i^vee>.
IntMatrix component_cartan(const DynkinComponent& c, IntVec& sym) {
  const int n = c.rank;
  IntMatrix a(n, IntVec(n, 0));
  sym.assign(n, 1);
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (c.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      // alpha_n short
      a[n - 1][n - 2] = -2;
      for (int i = 0; i + 1 < n; ++i) sym[i] = 2;
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      // alpha_n long
      a[n - 2][n - 1] = -2;
      sym[n - 1] = 2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;
      sym = {2, 2, 1, 1};
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long
      a[0][1] = -3;
      a[1][0] = -1;
      sym = {1, 3};
      break;
  }
  return a;
}

BigInt component_weyl_order(const DynkinComponent& c) {
  BigInt fact = 1;
  const int n = c.rank;
  switch (c.family) {
    case Family::A:
      for (int k = 2; k <= n + 1; ++k) fact *= k;
      return fact;
    case Family::B:
    case Family::C:
      for (int k = 2; k <= n; ++k) fact *= k;
      return fact << n;
    case Family::D:
      for (int k = 2; k <= n; ++k) fact *= k;
      return fact << (n - 1);
    case Family::E:
      if (n == 6) return BigInt(51840);
      if (n == 7) return BigInt(2903040);
      return BigInt(696729600);
    case Family::F:
      return BigInt(1152);
    case Family::G:
      return BigInt(12);
  }
  return fact;
}

std::vector<std::vector<Rational>> invert(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

RootSystem::RootSystem(std::vector<DynkinComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw InvalidInput("root system needs at least one component");
  for (const auto& c : components_) {
    validate_component(c);
    rank_ += static_cast<std::size_t>(c.rank);
  }
  cartan_.assign(rank_, IntVec(rank_, 0));
  symmetrizer_.assign(rank_, 1);
  weyl_order_ = 1;
  std::size_t off = 0;
  for (const auto& c : components_) {
    IntVec sym;
    IntMatrix block = component_cartan(c, sym);
    for (int i = 0; i < c.rank; ++i) {
      symmetrizer_[off + i] = sym[i];
      for (int j = 0; j < c.rank; ++j) cartan_[off + i][off + j] = block[i][j];
    }
    weyl_order_ *= component_weyl_order(c);
    off += static_cast<std::size_t>(c.rank);
  }

  // Reflection closure from the simple roots.
  std::set<IntVec> seen;
  std::vector<IntVec> frontier;
  for (std::size_t i = 0; i < rank_; ++i) {
    IntVec e(rank_, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& beta : frontier) {
      for (std::size_t i = 0; i < rank_; ++i) {
        std::int64_t p = 0;
        for (std::size_t j = 0; j < rank_; ++j) p += beta[j] * cartan_[i][j];
        if (p == 0) continue;
        IntVec img = beta;
        img[i] -= p;
        if (img[i] < 0) continue;
        if (seen.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  positive_roots_.assign(seen.begin(), seen.end());
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(),
                   [](const IntVec& a, const IntVec& b) {
                     auto ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
                     auto hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
                     if (ha != hb) return ha < hb;
                     return a < b;
                   });

  for (const auto& r : positive_roots_) {
    root_weights_.push_back(root_as_weight(r));
    IntVec dual(rank_);
    for (std::size_t j = 0; j < rank_; ++j) dual[j] = r[j] * symmetrizer_[j];
    root_dual_.push_back(std::move(dual));
    root_norms_.push_back(root_norm2(r));
  }

  // (omega_i, omega_k) = (A^{-1})[k][i] * d_k
  auto inv = invert(cartan_);
  BigInt den = 1;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t k = 0; k < rank_; ++k) {
      Rational v = inv[k][i] * symmetrizer_[k];
      BigInt d = boost::multiprecision::denominator(v);
      den = boost::multiprecision::lcm(den, d);
    }
  form_denominator_ = static_cast<std::int64_t>(den);
  scaled_gram_.assign(rank_, IntVec(rank_, 0));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t k = 0; k < rank_; ++k) {
      Rational v = inv[k][i] * symmetrizer_[k] * form_denominator_;
      scaled_gram_[i][k] = static_cast<std::int64_t>(boost::multiprecision::numerator(v));
    }
}

void RootSystem::check_weight(const Weight& w) const {
  if (w.size() != rank_) {
    throw InvalidInput("weight " + to_string(w) + " has length " + std::to_string(w.size()) +
                       ", expected " + std::to_string(rank_));
  }
}

Weight RootSystem::root_as_weight(std::span<const std::int64_t> root) const {
  if (root.size() != rank_) throw InvalidInput("root has wrong length");
  IntVec c(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) c[i] += cartan_[i][j] * root[j];
  return Weight(std::move(c));
}

Weight RootSystem::simple_root_weight(std::size_t i) const {
  IntVec c(rank_);
  for (std::size_t k = 0; k < rank_; ++k) c[k] = cartan_[k][i];
  return Weight(std::move(c));
}

Weight RootSystem::fundamental_weight(std::size_t i) const {
  IntVec c(rank_, 0);
  c.at(i) = 1;
  return Weight(std::move(c));
}

std::int64_t RootSystem::root_norm2(std::span<const std::int64_t> root) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) s += root[i] * root[j] * symmetrizer_[i] * cartan_[i][j];
  return s;
}

std::int64_t RootSystem::pair_coroot(const Weight& lambda, std::span<const std::int64_t> root) const {
  check_weight(lambda);
  if (root.size() != rank_) throw InvalidInput("root has wrong length");
  std::int64_t num = 0;
  for (std::size_t j = 0; j < rank_; ++j) num += root[j] * symmetrizer_[j] * lambda[j];
  const std::int64_t n2 = root_norm2(root);
  if (n2 <= 0) throw InvalidInput("not a root");
  return 2 * num / n2;
}

std::int64_t RootSystem::pair_coroot(const Weight& lambda, std::size_t k) const {
  return 2 * root_pairing_numerator(lambda, k) / root_norms_[k];
}

std::int64_t RootSystem::root_pairing_numerator(const Weight& lambda, std::size_t k) const {
  const auto& d = root_dual_[k];
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rank_; ++j) s += d[j] * lambda[j];
  return s;
}

std::int64_t RootSystem::scaled_inner_product(const Weight& a, const Weight& b) const {
  check_weight(a);
  check_weight(b);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t k = 0; k < rank_; ++k) row += scaled_gram_[i][k] * b[k];
    s += a[i] * row;
  }
  return s;
}

Rational RootSystem::inner_product(const Weight& a, const Weight& b) const {
  return Rational(scaled_inner_product(a, b), form_denominator_);
}

bool RootSystem::is_dominant(const Weight& lambda) const {
  check_weight(lambda);
  return std::all_of(lambda.coords().begin(), lambda.coords().end(), [](auto c) { return c >= 0; });
}

bool RootSystem::is_regular_shifted(const Weight& lambda) const {
  check_weight(lambda);
  const Weight v = lambda + rho();
  for (std::size_t k = 0; k < positive_roots_.size(); ++k)
    if (root_pairing_numerator(v, k) == 0) return false;
  return true;
}

int RootSystem::shifted_inversions(const Weight& lambda) const {
  check_weight(lambda);
  const Weight v = lambda + rho();
  int n = 0;
  for (std::size_t k = 0; k < positive_roots_.size(); ++k)
    if (root_pairing_numerator(v, k) < 0) ++n;
  return n;
}

Weight RootSystem::reflect(const Weight& lambda, std::size_t i) const {
  Weight out = lambda;
  const std::int64_t p = lambda[i];
  if (p != 0)
    for (std::size_t k = 0; k < rank_; ++k) out[k] -= p * cartan_[k][i];
  return out;
}

Weight RootSystem::reflect_shifted(const Weight& lambda, std::size_t i) const {
  return reflect(lambda + rho(), i) - rho();
}

Weight RootSystem::reflect_root(const Weight& lambda, std::span<const std::int64_t> root) const {
  const std::int64_t p = pair_coroot(lambda, root);
  Weight out = lambda;
  if (p != 0) out -= p * root_as_weight(root);
  return out;
}

std::optional<ShiftedDominant> RootSystem::make_dominant_shifted(const Weight& lambda) const {
  check_weight(lambda);
  Weight v = lambda + rho();
  ShiftedDominant out;
  const std::size_t bound = positive_roots_.size();
  for (;;) {
    std::size_t i = 0;
    while (i < rank_ && v[i] >= 0) ++i;
    if (i == rank_) break;
    if (out.word.size() >= bound) throw std::logic_error("dominance loop exceeded |Phi+|");
    v = reflect(v, i);
    out.word.push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < rank_; ++i)
    if (v[i] == 0) return std::nullopt;
  out.length = static_cast<int>(out.word.size());
  if (out.length != shifted_inversions(lambda))
    throw std::logic_error("reduced word length disagrees with inversion count for " +
                           to_string(lambda));
  out.dominant = v - rho();
  return out;
}

Weight RootSystem::dual_weight(const Weight& mu) const {
  if (!is_dominant(mu)) throw InvalidInput("dual_weight: " + to_string(mu) + " is not dominant");
  Weight v = -mu;
  for (;;) {
    std::size_t i = 0;
    while (i < rank_ && v[i] >= 0) ++i;
    if (i == rank_) break;
    v = reflect(v, i);
  }
  return v;
}

BigInt RootSystem::weyl_dimension(const Weight& mu) const {
  if (!is_dominant(mu)) throw InvalidInput("weyl_dimension: " + to_string(mu) + " is not dominant");
  const Weight shifted = mu + rho();
  const Weight r = rho();
  BigInt num = 1, den = 1;
  for (std::size_t k = 0; k < positive_roots_.size(); ++k) {
    num *= root_pairing_numerator(shifted, k);
    den *= root_pairing_numerator(r, k);
  }
  return num / den;
}

}  // namespace wonderful
