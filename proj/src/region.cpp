#include "wonderful/region.hpp"

#include <sstream>

namespace wonderful {

PlotKind parse_plot_kind(const std::string& s) {
  if (s == "omega" || s == "Omega") return PlotKind::Omega;
  if (s == "R" || s == "r") return PlotKind::R;
  throw InvalidInput("unknown plot kind '" + s + "' (omega, R)");
}

namespace {

void check_shape(const WonderfulVariety& x, std::int64_t n_min, std::int64_t n_max) {
  if (x.rank() < 1 || x.rank() > 2)
    throw InvalidInput("region plots need rank 1 or 2, " + x.name + " has rank " +
                       std::to_string(x.rank()));
  if (n_min > n_max) throw InvalidInput("empty plot range");
  if (n_max - n_min > 200) throw InvalidInput("plot range too large");
}

template <class F>
void for_grid(std::size_t r, std::int64_t lo, std::int64_t hi, F&& f) {
  IntVec n(r, lo);
  for (;;) {
    f(n);
    // last coordinate fastest, so the output is lexicographic in n
    std::size_t i = r;
    while (i > 0 && n[i - 1] == hi) n[--i] = lo;
    if (i == 0) return;
    ++n[i - 1];
  }
}

}  // namespace

RegionPlot omega_plot(const CohomologyEngine& engine, std::int64_t n_min, std::int64_t n_max) {
  const auto& x = engine.variety();
  check_shape(x, n_min, n_max);
  const auto& g = *x.group;
  RegionPlot p{x.name, PlotKind::Omega, x.rank(), lambda_zero(x), n_min, n_max, {}};
  for_grid(x.rank(), n_min, n_max, [&](const IntVec& n) {
    Weight mu = p.base + x.pic_weight(n);
    p.points.push_back({n, mu, engine.omega_signature(mu), !g.is_regular_shifted(mu)});
  });
  return p;
}

RegionPlot r_plot(const CohomologyEngine& engine, const Weight& lambda, std::int64_t n_min,
                  std::int64_t n_max) {
  const auto& x = engine.variety();
  check_shape(x, n_min, n_max);
  const auto& g = *x.group;
  g.check_weight(lambda);
  RegionPlot p{x.name, PlotKind::R, x.rank(), lambda, n_min, n_max, {}};
  const SubsetMask subsets = SubsetMask{1} << x.rank();
  for_grid(x.rank(), n_min, n_max, [&](const IntVec& c) {
    Weight mu = lambda;
    for (std::size_t i = 0; i < c.size(); ++i) mu += c[i] * x.spherical_roots[i];
    SubsetMask hit = subsets;
    for (SubsetMask J = 0; J < subsets; ++J) {
      if (engine.in_translated_R(lambda, mu, J)) {
        hit = J;
        break;
      }
    }
    if (hit == subsets) throw std::logic_error("R_J classes do not cover the lattice");
    p.points.push_back({c, mu, hit, !g.is_regular_shifted(mu)});
  });
  return p;
}

namespace {

constexpr int kCell = 24;
constexpr int kMargin = 32;

struct ClassStyle {
  const char* label;
  const char* glyph;
};

ClassStyle style_for(SubsetMask J, std::size_t rank) {
  const SubsetMask full = (SubsetMask{1} << rank) - 1;
  if (J == full) return {"all", "bullet"};
  if (J == 0) return {"none", "dot"};
  return J == 1 ? ClassStyle{"gamma1", "circle"} : ClassStyle{"gamma2", "plus"};
}

void marker(std::ostringstream& os, const char* glyph, int cx, int cy, bool singular) {
  const char* extra = singular ? " class=\"singular\"" : "";
  if (std::string(glyph) == "bullet") {
    os << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"5\" fill=\"black\"" << extra
       << "/>\n";
  } else if (std::string(glyph) == "circle") {
    os << "    <circle cx=\"" << cx << "\" cy=\"" << cy
       << "\" r=\"5\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"" << extra << "/>\n";
  } else if (std::string(glyph) == "plus") {
    os << "    <path d=\"M" << cx - 6 << ' ' << cy << "h12M" << cx << ' ' << cy - 6
       << "v12\" stroke=\"black\" stroke-width=\"1.5\"" << extra << "/>\n";
  } else {
    os << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"1.5\" fill=\"black\"" << extra
       << "/>\n";
  }
}

}  // namespace

std::string render_svg(const RegionPlot& plot) {
  const int span = static_cast<int>(plot.n_max - plot.n_min);
  const int width = 2 * kMargin + span * kCell;
  const int height = plot.rank == 2 ? width : 2 * kMargin;
  auto px = [&](std::int64_t n) { return kMargin + static_cast<int>(n - plot.n_min) * kCell; };
  auto py = [&](std::int64_t n) {
    return plot.rank == 2 ? height - px(n) : kMargin;   // n2 grows upwards
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
     << "\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << "  <title>" << (plot.kind == PlotKind::Omega ? "Omega_J" : "R_J") << " for "
     << plot.variety << ", base " << to_string(plot.base) << "</title>\n";
  // axes through the origin of the grid, if it is visible
  os << "  <g id=\"axes\" stroke=\"#999\" stroke-width=\"1\">\n";
  if (plot.n_min <= 0 && 0 <= plot.n_max) {
    os << "    <line x1=\"" << kMargin << "\" y1=\"" << py(0) << "\" x2=\"" << width - kMargin
       << "\" y2=\"" << py(0) << "\"/>\n";
    if (plot.rank == 2)
      os << "    <line x1=\"" << px(0) << "\" y1=\"" << kMargin << "\" x2=\"" << px(0)
         << "\" y2=\"" << height - kMargin << "\"/>\n";
  }
  os << "  </g>\n";

  const SubsetMask subsets = SubsetMask{1} << plot.rank;
  for (SubsetMask J = subsets; J-- > 0;) {
    const auto st = style_for(J, plot.rank);
    os << "  <g id=\"J-" << st.label << "\" data-mask=\"" << J << "\">\n";
    for (const auto& p : plot.points) {
      if (p.J != J) continue;
      marker(os, st.glyph, px(p.n[0]), plot.rank == 2 ? py(p.n[1]) : py(0), p.singular);
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_sidecar(const RegionPlot& plot) {
  std::ostringstream os;
  for (const auto& p : plot.points) {
    for (auto v : p.n) os << v << ' ';
    os << p.J << '\n';
  }
  return os.str();
}

}  // namespace wonderful
