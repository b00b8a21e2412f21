#include "wonderful/scan.hpp"

#include <algorithm>
#include <sstream>

#include "wonderful/divisibility.hpp"
#include "wonderful/oracles.hpp"

namespace wonderful {

ScanCheck parse_scan_check(const std::string& s) {
  if (s == "vanishing") return ScanCheck::Vanishing;
  if (s == "serre") return ScanCheck::Serre;
  if (s == "h0") return ScanCheck::H0;
  if (s == "divisibility") return ScanCheck::Divisibility;
  throw InvalidInput("unknown check '" + s + "' (vanishing, serre, h0, divisibility)");
}

std::string to_string(ScanCheck c) {
  switch (c) {
    case ScanCheck::Vanishing: return "vanishing";
    case ScanCheck::Serre: return "serre";
    case ScanCheck::H0: return "h0";
    case ScanCheck::Divisibility: return "divisibility";
  }
  return "?";
}

std::vector<ScanCheck> parse_scan_checks(const std::string& csv) {
  std::vector<ScanCheck> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto c = parse_scan_check(item);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  if (out.empty()) throw InvalidInput("no checks selected");
  return out;
}

bool ScanReport::ok() const {
  return std::none_of(outcomes.begin(), outcomes.end(),
                      [](const ScanOutcome& o) { return o.status == ScanOutcome::Fail; });
}

nlohmann::ordered_json ScanReport::to_json() const {
  nlohmann::ordered_json out;
  out["variety"] = variety;
  out["box"] = box;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& o : outcomes) {
    nlohmann::ordered_json j;
    j["check"] = to_string(o.check);
    j["status"] = o.status == ScanOutcome::Pass   ? "pass"
                  : o.status == ScanOutcome::Fail ? "fail"
                                                  : "skipped";
    j["lambdas"] = o.lambdas;
    if (!o.detail.empty()) j["detail"] = o.detail;
    arr.push_back(std::move(j));
  }
  out["checks"] = std::move(arr);
  out["ok"] = ok();
  return out;
}

namespace {

std::string degree_list(const std::vector<int>& ds) {
  std::string s;
  for (int d : ds) s += (s.empty() ? "" : ",") + std::to_string(d);
  return "{" + s + "}";
}

// Returns an empty string when lambda passes.
std::string check_one(const CohomologyEngine& engine, ScanCheck check, const Weight& lambda,
                      const std::optional<std::set<int>>& tabulated) {
  const auto& x = engine.variety();
  const auto& g = *x.group;
  switch (check) {
    case ScanCheck::Vanishing: {
      const auto table = engine.table(lambda, false);
      const auto ds = table.degrees();
      for (int d : ds) {
        if (d < 0 || d > x.dimension_N || (tabulated && !tabulated->count(d)))
          return "lambda=" + to_string(lambda) + " has H^" + std::to_string(d) +
                 " != 0, degrees " + degree_list(ds);
      }
      if (g.is_dominant(lambda) && !(ds.empty() || ds == std::vector<int>{0}))
        return "dominant lambda=" + to_string(lambda) + " has higher cohomology " + degree_list(ds);
      return {};
    }
    case ScanCheck::Serre: {
      auto r = serre_involution_check(engine, lambda);
      return r.ok ? std::string() : r.counterexample;
    }
    case ScanCheck::H0: {
      const auto table = engine.table(lambda, false);
      std::vector<Weight> engine_h0;
      if (const auto* grp = table.group(0)) {
        for (const auto& c : grp->constituents) {
          if (c.multiplicity != 1)
            return "lambda=" + to_string(lambda) + ": H^0 constituent " +
                   to_string(c.highest_weight) + " has multiplicity " +
                   std::to_string(c.multiplicity);
          engine_h0.push_back(c.highest_weight);
        }
      }
      if (engine_h0 != h0_dominant_scan(x, lambda))
        return "lambda=" + to_string(lambda) + ": H^0 differs from the dominant-weight scan";
      return {};
    }
    case ScanCheck::Divisibility: {
      const auto& rule = *x.divisibility;
      const auto contribs = engine.contributions(lambda);
      auto a = check_lengths_against_rule(contribs, rule);
      if (!a.ok) return "lambda=" + to_string(lambda) + ": " + a.counterexample;
      auto b = check_table_against_rule(aggregate(g, lambda, contribs, false), rule);
      return b.ok ? std::string() : b.counterexample;
    }
  }
  return {};
}

}  // namespace

ScanReport run_scan(const CohomologyEngine& engine, std::int64_t box,
                    const std::vector<ScanCheck>& checks) {
  if (box < 0) throw InvalidInput("box must be >= 0");
  const auto& x = engine.variety();
  ScanReport report{x.name, box, {}};
  const auto tabulated = tabulated_degrees(x);
  for (ScanCheck check : checks) {
    ScanOutcome o;
    o.check = check;
    if (check == ScanCheck::Divisibility && !x.divisibility) {
      o.status = ScanOutcome::Skipped;
      o.detail = "no divisibility rule for " + x.name;
      report.outcomes.push_back(o);
      continue;
    }
    for_each_in_box(x.pic_rank(), box, [&](const IntVec& c) {
      if (o.status == ScanOutcome::Fail) return;
      ++o.lambdas;
      auto why = check_one(engine, check, x.pic_weight(c), tabulated);
      if (!why.empty()) {
        o.status = ScanOutcome::Fail;
        o.detail = std::move(why);
      }
    });
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

}  // namespace wonderful
