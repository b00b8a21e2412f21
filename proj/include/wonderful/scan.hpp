#pragma once

// Oracle suites run over every lambda whose pic coordinates lie in [-box, box].

#include <string>
#include <vector>

#include <json.hpp>

#include "wonderful/cohomology.hpp"

namespace wonderful {

enum class ScanCheck { Vanishing, Serre, H0, Divisibility };
ScanCheck parse_scan_check(const std::string& s);
std::string to_string(ScanCheck c);
/// "vanishing,serre" -> list; throws InvalidInput on an unknown name.
std::vector<ScanCheck> parse_scan_checks(const std::string& csv);

struct ScanOutcome {
  ScanCheck check;
  enum Status { Pass, Fail, Skipped } status = Pass;
  std::size_t lambdas = 0;
  std::string detail;   // counterexample, or why it was skipped
};

struct ScanReport {
  std::string variety;
  std::int64_t box = 0;
  std::vector<ScanOutcome> outcomes;
  bool ok() const;
  nlohmann::ordered_json to_json() const;
};

ScanReport run_scan(const CohomologyEngine& engine, std::int64_t box,
                    const std::vector<ScanCheck>& checks);

/// Calls f(coords) for every coordinate vector in [-box, box]^dim.
template <class F>
void for_each_in_box(std::size_t dim, std::int64_t box, F&& f) {
  IntVec c(dim, -box);
  for (;;) {
    f(static_cast<const IntVec&>(c));
    std::size_t i = 0;
    while (i < dim && c[i] == box) c[i++] = -box;
    if (i == dim) return;
    ++c[i];
  }
}

}  // namespace wonderful
