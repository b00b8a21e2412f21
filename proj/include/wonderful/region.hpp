#pragma once

// Weight-region diagrams for rank 1 and 2. An Omega plot places lambda_0 + sum n_i w~_i
// on the grid; an R plot places lambda + sum c_i gamma_i. Each point carries the J
// it belongs to.

#include <string>
#include <vector>

#include "wonderful/cohomology.hpp"

namespace wonderful {

enum class PlotKind { Omega, R };
PlotKind parse_plot_kind(const std::string& s);

struct RegionPoint {
  IntVec n;            // grid coordinates
  Weight weight;
  SubsetMask J = 0;
  bool singular = false;   // weight + rho not regular
};

struct RegionPlot {
  std::string variety;
  PlotKind kind = PlotKind::Omega;
  std::size_t rank = 0;
  Weight base;
  std::int64_t n_min = 0, n_max = 0;
  std::vector<RegionPoint> points;   // lexicographic in n
};

/// Throws InvalidInput unless rank is 1 or 2 and n_min <= n_max.
RegionPlot omega_plot(const CohomologyEngine& engine, std::int64_t n_min, std::int64_t n_max);
RegionPlot r_plot(const CohomologyEngine& engine, const Weight& lambda, std::int64_t n_min,
                  std::int64_t n_max);

std::string render_svg(const RegionPlot& plot);
/// One line per point: "n1 n2 mask" (rank 1: "n1 mask").
std::string render_sidecar(const RegionPlot& plot);

}  // namespace wonderful
