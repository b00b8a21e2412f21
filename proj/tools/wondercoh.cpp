// wondercoh: line-bundle cohomology of wonderful varieties of minimal rank.
//
// exit codes: 0 ok, 1 scan found a failure, 2 usage / unknown variety,
// 3 internal validation failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wonderful/io.hpp"
#include "wonderful/region.hpp"
#include "wonderful/scan.hpp"

using namespace wonderful;

namespace {

constexpr int kUsage = 2;
constexpr int kValidation = 3;

struct Common {
  std::string name;
  std::string variety_file;
  std::string out;
};

WonderfulVariety resolve(const Common& c) {
  if (!c.variety_file.empty()) return load_variety_file(c.variety_file);
  if (c.name.empty()) throw InvalidInput("give a variety name or --variety-file");
  return build_case(c.name);
}

IntVec parse_coords(const std::string& s) {
  IntVec out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("malformed coordinate '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw InvalidInput("malformed coordinate '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty --lambda");
  return out;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + c.out + "'");
  f << text;
}

Weight lambda_from(const WonderfulVariety& x, const std::string& spec, bool relative) {
  IntVec coords = parse_coords(spec);
  if (coords.size() != x.pic_rank())
    throw InvalidInput("--lambda needs " + std::to_string(x.pic_rank()) + " coordinates, got " +
                       std::to_string(coords.size()));
  if (relative) {
    const IntVec l0 = lambda_zero_coords(x);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += l0[i];
  }
  return x.pic_weight(coords);
}

std::string sidecar_path(const std::string& svg) {
  std::filesystem::path p(svg);
  p.replace_extension(".classes.txt");
  return p.string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of line bundles on wonderful varieties of minimal rank"};
  app.require_subcommand(1);
  Common common;

  auto* list = app.add_subcommand("list", "List catalog entries");
  bool list_figures = false;
  list->add_flag("--figures", list_figures, "Only the rank <= 2 figure cases");

  auto* desc = app.add_subcommand("describe", "Print the data and validation report of a variety");

  auto* coh = app.add_subcommand("cohomology", "Decompose H^d(X, L_lambda) into irreducibles");
  std::string lambda_spec, format = "text";
  std::optional<int> degree;
  bool no_witness = false, relative = false;
  coh->add_option("--lambda", lambda_spec, "Comma-separated pic coordinates")->required();
  coh->add_option("--degree", degree, "Only this degree");
  coh->add_option("--format", format, "text, json or csv");
  coh->add_flag("--no-witness", no_witness, "Drop (J, mu) witnesses");
  coh->add_flag("--relative-lambda0", relative, "Coordinates are offsets from lambda_0");

  auto* scan = app.add_subcommand("scan", "Run oracle checks over a coordinate box");
  std::int64_t box = 4;
  std::string checks = "vanishing,serre,h0,divisibility";
  scan->add_option("--box", box, "Coordinates range over [-box, box]")->check(CLI::NonNegativeNumber);
  scan->add_option("--checks", checks, "Subset of vanishing,serre,h0,divisibility");

  auto* plot = app.add_subcommand("plot", "Region diagram (SVG plus classification sidecar)");
  std::string kind = "omega", base_spec;
  std::int64_t n_min = -5, n_max = 5;
  std::string sidecar;
  plot->add_option("--kind", kind, "omega or R");
  plot->add_option("--min", n_min, "Lower grid bound");
  plot->add_option("--max", n_max, "Upper grid bound");
  plot->add_option("--lambda", base_spec, "Base point for R plots (pic coordinates)");
  plot->add_option("--sidecar", sidecar, "Classification file (default: <out>.classes.txt)");

  for (auto* sub : {desc, coh, scan, plot}) {
    sub->add_option("variety", common.name, "Catalog name, e.g. E6/F4");
    sub->add_option("--variety-file", common.variety_file, "JSON variety descriptor");
    sub->add_option("--out", common.out, "Write to this file instead of stdout");
  }
  plot->get_option("--out")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (list->parsed()) {
      for (const auto& n : list_figures ? figure_case_names() : catalog_names())
        std::cout << n << '\n';
      return 0;
    }
    const WonderfulVariety x = resolve(common);

    if (desc->parsed()) {
      emit(common, describe(x));
      return 0;
    }
    CohomologyEngine engine(x);
    if (coh->parsed()) {
      const auto fmt = parse_format(format);
      const Weight lambda = lambda_from(x, lambda_spec, relative);
      const auto table = engine.table(lambda, !no_witness);
      emit(common, render_table(TableView{&x, &table, degree}, fmt));
      return 0;
    }
    if (scan->parsed()) {
      const auto report = run_scan(engine, box, parse_scan_checks(checks));
      emit(common, report.to_json().dump(2) + "\n");
      return report.ok() ? 0 : 1;
    }
    if (plot->parsed()) {
      const auto k = parse_plot_kind(kind);
      RegionPlot p;
      if (k == PlotKind::Omega) {
        p = omega_plot(engine, n_min, n_max);
      } else {
        if (base_spec.empty()) throw InvalidInput("R plots need --lambda");
        p = r_plot(engine, lambda_from(x, base_spec, false), n_min, n_max);
      }
      emit(common, render_svg(p));
      Common side = common;
      side.out = sidecar.empty() ? sidecar_path(common.out) : sidecar;
      emit(side, render_sidecar(p));
      return 0;
    }
  } catch (const ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << '\n';
    for (const auto& f : e.report().failures()) std::cerr << "  " << f << '\n';
    return kValidation;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kValidation;
  }
  return kUsage;
}
