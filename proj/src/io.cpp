#include "wonderful/io.hpp"

#include <fstream>
#include <sstream>

namespace wonderful {

using nlohmann::json;
using nlohmann::ordered_json;

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw InvalidInput("unknown format '" + s + "' (text, json, csv)");
}

namespace {

std::string weight_spaced(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

std::string subset_string(SubsetMask J) {
  std::string s = "{";
  bool first = true;
  for (int i : subset_indices(J)) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

bool selected(const TableView& v, int degree) {
  return !v.only_degree || *v.only_degree == degree;
}

}  // namespace

ordered_json table_to_json(const TableView& view) {
  const auto& x = *view.variety;
  const auto& t = *view.table;
  ordered_json out;
  out["variety"] = x.name;
  out["lambda"] = t.lambda.coords();
  out["N"] = x.dimension_N;
  ordered_json groups = ordered_json::array();
  for (const auto& g : t.groups) {
    if (!selected(view, g.degree)) continue;
    ordered_json jg;
    jg["degree"] = g.degree;
    jg["dimension"] = g.dimension.str();
    ordered_json cons = ordered_json::array();
    for (const auto& c : g.constituents) {
      ordered_json jc;
      jc["highest_weight"] = c.highest_weight.coords();
      jc["multiplicity"] = c.multiplicity;
      ordered_json wit = ordered_json::array();
      for (const auto& w : c.witnesses) {
        ordered_json jw;
        jw["J"] = subset_indices(w.J);
        jw["mu"] = w.mu.coords();
        jw["length"] = w.length;
        wit.push_back(std::move(jw));
      }
      jc["witnesses"] = std::move(wit);
      cons.push_back(std::move(jc));
    }
    jg["constituents"] = std::move(cons);
    groups.push_back(std::move(jg));
  }
  out["groups"] = std::move(groups);
  return out;
}

std::string render_table(const TableView& view, OutputFormat fmt) {
  const auto& x = *view.variety;
  const auto& t = *view.table;
  const auto& g = *x.group;
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json:
      os << table_to_json(view).dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      os << "degree,highest_weight,multiplicity,irrep_dimension,degree_dimension\n";
      for (const auto& grp : t.groups) {
        if (!selected(view, grp.degree)) continue;
        for (const auto& c : grp.constituents) {
          os << grp.degree << ',' << weight_spaced(c.highest_weight) << ',' << c.multiplicity
             << ',' << g.weyl_dimension(c.highest_weight).str() << ',' << grp.dimension.str()
             << '\n';
        }
      }
      break;
    case OutputFormat::Text: {
      os << "variety: " << x.name << '\n';
      os << "lambda:  " << to_string(t.lambda);
      if (auto pc = pic_contains(x, t.lambda)) os << "  (pic " << to_string(Weight(*pc)) << ')';
      os << '\n' << "N:       " << x.dimension_N << '\n';
      bool any = false;
      for (const auto& grp : t.groups) {
        if (!selected(view, grp.degree)) continue;
        any = true;
        os << "H^" << grp.degree << "  dim " << grp.dimension.str() << '\n';
        for (const auto& c : grp.constituents) {
          os << "  L(" << to_string(c.highest_weight) << ") x" << c.multiplicity << "  dim "
             << g.weyl_dimension(c.highest_weight).str() << '\n';
          for (const auto& w : c.witnesses) {
            os << "    J=" << subset_string(w.J) << " mu=" << to_string(w.mu)
               << " l=" << w.length << '\n';
          }
        }
      }
      if (!any) os << "all cohomology vanishes\n";
      break;
    }
  }
  return os.str();
}

std::string describe(const WonderfulVariety& x) {
  std::ostringstream os;
  const auto& g = *x.group;
  os << "variety:          " << x.name << '\n';
  os << "group:            " << to_string(g.components()) << " (rank " << g.rank() << ", "
     << g.num_positive_roots() << " positive roots)\n";
  os << "rank r = " << x.rank() << '\n';
  for (std::size_t i = 0; i < x.rank(); ++i)
    os << "  gamma_" << i + 1 << " = " << to_string(x.spherical_roots[i]) << '\n';
  os << "pic basis:\n";
  for (std::size_t i = 0; i < x.pic_rank(); ++i)
    os << "  w~_" << i + 1 << " = " << to_string(x.pic_basis[i]) << '\n';
  os << "Q white nodes:    {";
  for (std::size_t i = 0; i < x.q_simple_roots.size(); ++i)
    os << (i ? "," : "") << x.q_simple_roots[i] + 1;
  os << "}\n";
  os << "N = " << x.dimension_N << '\n';
  os << "2rho_X = " << to_string(x.two_rho_X) << '\n';
  if (x.rank() == 1 || x.rank() == 2) {
    try {
      auto l0 = lambda_zero_coords(x);
      os << "lambda_0 = ";
      for (std::size_t i = 0; i < l0.size(); ++i) {
        if (i) os << " + ";
        os << l0[i] << " w~_" << i + 1;
      }
      os << "  = " << to_string(x.pic_weight(l0)) << '\n';
    } catch (const InvalidInput& e) {
      os << "lambda_0 undefined: " << e.what() << '\n';
    }
  }
  os << "validation:\n";
  for (const auto& c : validate(x).checks) {
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ')';
    os << '\n';
  }
  return os.str();
}

namespace {

Family family_from(const std::string& s) {
  if (s.size() != 1 || std::string("ABCDEFG").find(s[0]) == std::string::npos)
    throw InvalidInput("unknown Dynkin family '" + s + "'");
  return static_cast<Family>(s[0]);
}

std::vector<Weight> weights_from(const json& arr, std::size_t rank, const char* field) {
  std::vector<Weight> out;
  for (const auto& v : arr) {
    auto coords = v.get<IntVec>();
    if (coords.size() != rank)
      throw InvalidInput(std::string(field) + ": vector of wrong length");
    out.emplace_back(std::move(coords));
  }
  return out;
}

}  // namespace

WonderfulVariety load_variety(const json& doc) {
  try {
    WonderfulVariety x;
    x.name = doc.value("name", std::string("custom"));
    std::vector<DynkinComponent> comps;
    for (const auto& c : doc.at("group")) {
      comps.push_back({family_from(c.at(0).get<std::string>()), c.at(1).get<int>()});
    }
    x.group = std::make_shared<const RootSystem>(std::move(comps));
    const std::size_t rank = x.group->rank();
    x.spherical_roots = weights_from(doc.at("spherical_roots"), rank, "spherical_roots");
    x.pic_basis = weights_from(doc.at("pic_basis"), rank, "pic_basis");
    for (int q : doc.at("q_simple_roots").get<std::vector<int>>()) {
      if (q < 1 || static_cast<std::size_t>(q) > rank)
        throw InvalidInput("q_simple_roots index " + std::to_string(q) + " out of range");
      x.q_simple_roots.push_back(static_cast<std::size_t>(q - 1));
    }
    if (doc.contains("sgamma")) {
      std::vector<SGammaPair> pairs;
      for (const auto& p : doc.at("sgamma")) {
        pairs.push_back({p.at(0).get<IntVec>(), p.at(1).get<IntVec>(), std::nullopt});
        if (pairs.back().alpha.size() != rank || pairs.back().beta.size() != rank)
          throw InvalidInput("sgamma: root of wrong length");
      }
      x.sgamma = std::move(pairs);
    }
    // Orientation: (w~_i, gamma_i) > 0 when the pairing matrix is square diagonal.
    if (x.pic_rank() == x.rank()) {
      const auto& g = *x.group;
      for (std::size_t i = 0; i < x.rank(); ++i) {
        if (g.scaled_inner_product(x.pic_basis[i], x.spherical_roots[i]) < 0)
          x.pic_basis[i] *= -1;
      }
    }
    derive_invariants(x);
    require_valid(x);
    return x;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed variety descriptor: ") + e.what());
  }
}

WonderfulVariety load_variety_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open variety file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InvalidInput("cannot parse '" + path + "': " + e.what());
  }
  return load_variety(doc);
}

ordered_json variety_to_json(const WonderfulVariety& x) {
  ordered_json out;
  out["name"] = x.name;
  ordered_json grp = ordered_json::array();
  for (const auto& c : x.group->components())
    grp.push_back({std::string(1, static_cast<char>(c.family)), c.rank});
  out["group"] = std::move(grp);
  ordered_json sr = ordered_json::array();
  for (const auto& w : x.spherical_roots) sr.push_back(w.coords());
  out["spherical_roots"] = std::move(sr);
  ordered_json pb = ordered_json::array();
  for (const auto& w : x.pic_basis) pb.push_back(w.coords());
  out["pic_basis"] = std::move(pb);
  std::vector<std::size_t> q;
  for (auto i : x.q_simple_roots) q.push_back(i + 1);
  out["q_simple_roots"] = q;
  if (x.sgamma) {
    ordered_json sg = ordered_json::array();
    for (const auto& p : *x.sgamma) sg.push_back({p.alpha, p.beta});
    out["sgamma"] = std::move(sg);
  }
  return out;
}

}  // namespace wonderful
