#include "wonderful/divisibility.hpp"

namespace wonderful {

std::set<int> allowed_degrees(const DivisibilityRule& rule) {
  const std::int64_t p = rule.restricted_positive_roots;
  const std::int64_t r = rule.rank;
  std::set<int> out;
  for (std::int64_t lt = 0; lt <= p; ++lt) {
    for (std::int64_t j = 0; j <= r; ++j) {
      if (lt < j || p - lt < r - j) continue;
      if ((lt == 0) != (j == 0)) continue;
      if ((lt == p) != (j == r)) continue;
      out.insert(static_cast<int>(rule.modulus * lt + j));
    }
  }
  return out;
}

RuleCheck check_table_against_rule(const CohomologyTable& table, const DivisibilityRule& rule) {
  const auto allowed = allowed_degrees(rule);
  for (const auto& g : table.groups) {
    if (!allowed.count(g.degree)) {
      return {false, "degree " + std::to_string(g.degree) + " is nonzero for lambda=" +
                         to_string(table.lambda) + " but not allowed by the " + rule.family +
                         " rule"};
    }
  }
  return {};
}

RuleCheck check_lengths_against_rule(const std::vector<Contribution>& contribs,
                                     const DivisibilityRule& rule) {
  for (const auto& c : contribs) {
    if (c.length % rule.modulus != 0) {
      return {false, "l(" + to_string(c.mu) + ") = " + std::to_string(c.length) +
                         " is not divisible by " + std::to_string(rule.modulus)};
    }
  }
  return {};
}

std::optional<std::set<int>> tabulated_degrees(const WonderfulVariety& x) {
  const int n = x.dimension_N;
  auto avoiding = [n](std::initializer_list<int> bad) {
    std::set<int> out;
    for (int d = 0; d <= n; ++d) {
      bool ok = true;
      for (int b : bad) ok = ok && d != b && n - d != b;
      if (ok) out.insert(d);
    }
    return out;
  };
  const std::string fam = x.divisibility ? x.divisibility->family : std::string();
  if (fam == "group") return avoiding({1, 2, 4});
  if (fam == "PGL/PSp") return avoiding({1, 2, 3, 4, 6, 7, 8});
  if (fam == "E6/F4") return std::set<int>{0, 9, 17, 26};
  if (x.rank() == 1) return std::set<int>{0, n};
  return std::nullopt;
}

}  // namespace wonderful
