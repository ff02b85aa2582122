#include "bsg/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace bsg::io {

std::string to_string(const Rational& q) { return q.str(); }

Rational rational_from_string(const std::string& s) {
  static const std::regex pattern(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(s, pattern)) throw Error(ErrorCode::InvalidInput, "malformed rational '" + s + "'");
  const auto slash = s.find('/');
  if (slash != std::string::npos && Integer(s.substr(slash + 1)) == 0)
    throw Error(ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
  return Rational(s);
}

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed ") + what + " JSON: " + e.what());
  }
}

const char* ring_name(Ring r) { return r == Ring::Z ? "Z" : "Z/2"; }
const char* variant_name(Variant v) { return v == Variant::Homology ? "homology" : "cohomology"; }

Json point(const Point2& p) { return Json::array({to_string(p.x()), to_string(p.y())}); }

Json matrix(const ValueMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json to_json(const SimplicialComplex& K) {
  Json j;
  j["type"] = "complex";
  j["vertex_count"] = K.vertex_count();
  j["dimension"] = K.dimension();
  j["facets"] = K.facets();
  if (!K.labels().empty()) {
    Json labels = Json::object();
    for (const auto& [v, name] : K.labels()) labels[std::to_string(v)] = name;
    j["labels"] = labels;
  }
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  return guarded("complex", [&] {
    if (j.at("type") != "complex") throw Error(ErrorCode::InvalidInput, "not a complex document");
    std::map<int, std::string> labels;
    if (j.contains("labels"))
      for (const auto& [k, v] : j.at("labels").items()) labels[std::stoi(k)] = v.get<std::string>();
    return build_from_facets(j.at("facets").get<std::vector<Simplex>>(), j.at("vertex_count").get<int>(),
                             std::move(labels));
  });
}

Json to_json(const PLMap& F, const std::string& kind) {
  Json j;
  j["type"] = "map";
  if (!kind.empty()) j["kind"] = kind;
  j["target_dim"] = F.target_dim();
  j["complex"] = to_json(*F.domain);
  j["values"] = matrix(F.values);
  return j;
}

PLMap map_from_json(const Json& j) {
  return guarded("map", [&] {
    if (j.at("type") != "map") throw Error(ErrorCode::InvalidInput, "not a map document");
    auto K = complex_from_json(j.at("complex"));
    const auto& rows = j.at("values");
    const int m = j.at("target_dim").get<int>();
    ValueMatrix values(static_cast<Eigen::Index>(rows.size()), m);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != static_cast<std::size_t>(m))
        throw Error(ErrorCode::InvalidInput, "value row " + std::to_string(i) + " has the wrong length");
      for (int k = 0; k < m; ++k) values(i, k) = rational_from_string(rows[i][k].get<std::string>());
    }
    return make_map(std::move(K), std::move(values));
  });
}

Json to_json(const BettiProfile& h) {
  Json torsion = Json::array();
  for (const auto& t : h.torsion) {
    Json degree = Json::array();
    for (const auto& x : t) degree.push_back(x.str());
    torsion.push_back(degree);
  }
  return Json{{"ring", ring_name(h.ring)}, {"variant", variant_name(h.variant)}, {"betti", h.betti}, {"torsion", torsion}};
}

BettiProfile betti_from_json(const Json& j) {
  return guarded("betti", [&] {
    BettiProfile h;
    const auto ring = j.at("ring").get<std::string>(), variant = j.at("variant").get<std::string>();
    if (ring != "Z" && ring != "Z/2") throw Error(ErrorCode::InvalidInput, "unknown ring " + ring);
    if (variant != "homology" && variant != "cohomology") throw Error(ErrorCode::InvalidInput, "unknown variant " + variant);
    h.ring = ring == "Z" ? Ring::Z : Ring::Z2;
    h.variant = variant == "homology" ? Variant::Homology : Variant::Cohomology;
    h.betti = j.at("betti").get<std::vector<int>>();
    for (const auto& degree : j.at("torsion")) {
      auto& t = h.torsion.emplace_back();
      for (const auto& x : degree) t.emplace_back(x.get<std::string>());
    }
    return h;
  });
}

Json to_json(const ReebGraph& G) {
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& n : G.nodes)
    nodes.push_back(Json{{"vertex", n.vertex}, {"value", to_string(n.value)}, {"kind", bsg::to_string(n.kind)},
                         {"down", n.down}, {"up", n.up}});
  for (const auto& e : G.edges) edges.push_back(Json{{"lo", e.lo}, {"hi", e.hi}});
  return Json{{"type", "reeb_graph"},
              {"nodes", nodes},
              {"edges", edges},
              {"homology", to_json(homology(G, Ring::Z))}};
}

Json to_json(const ReebNerve& N) {
  Json vertices = Json::array();
  for (const auto& v : N.vertices)
    vertices.push_back(Json{{"cell", {v.cell_x, v.cell_y}}, {"component", v.component}, {"faces", v.cells.size()}});
  return Json{{"type", "reeb_nerve"},
              {"grid", N.grid},
              {"overlap", to_string(N.overlap)},
              {"bounds", {{"lo", point(N.bounds.lo)}, {"hi", point(N.bounds.hi)}}},
              {"vertices", vertices},
              {"simplices", N.simplices},
              {"homology", to_json(N.homology(Ring::Z))}};
}

Json to_json(const VertexClassification& c, const SpecialGenericResult& sg) {
  Json labels = Json::array();
  for (const auto& l : c.labels) {
    Json e{{"vertex", l.vertex}, {"label", bsg::to_string(l.label)}};
    if (!l.lower_link.betti.empty()) e["lower_link"] = to_json(l.lower_link);
    else e["winding"] = l.winding;
    labels.push_back(e);
  }
  Json bad = Json::array();
  for (const auto& p : sg.bad_points) bad.push_back(point(p));
  return Json{{"type", "classification"},
              {"boundary_special_generic", sg.ok},
              {"witnesses", sg.witnesses},
              {"bad_points", bad},
              {"interior_singular", c.interior_singular},
              {"labels", labels}};
}

Json to_json(const Decomposition& D) {
  Json fibers = Json::array();
  for (const auto& f : D.fibers)
    fibers.push_back(Json{{"cell", f.cell},
                          {"collar", f.collar},
                          {"query", matrix(f.query)},
                          {"dimension", f.dimension},
                          {"expected_dimension", f.expected_dimension},
                          {"homology", to_json(f.homology)},
                          {"ok", f.ok()}});
  return Json{{"type", "decomposition"},
              {"cell_count", D.cell_count},
              {"collar_cells", D.collar_cells},
              {"core_cells", D.core_cells},
              {"fibers", fibers}};
}

Json to_json(const VerificationReport& r) {
  Json details = Json::array();
  for (const auto& d : r.details)
    details.push_back(Json{{"name", d.name}, {"expected", d.expected}, {"actual", d.actual}, {"pass", d.pass}});
  return Json{{"statement", r.statement}, {"pass", r.pass},       {"seed", r.seed},
              {"inputs", r.inputs},       {"details", details}, {"unverified_notes", r.unverified_notes}};
}

VerificationReport report_from_json(const Json& j) {
  return guarded("report", [&] {
    VerificationReport r;
    r.statement = j.at("statement").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.inputs = j.value("inputs", "");
    for (const auto& d : j.at("details"))
      r.check(d.at("name").get<std::string>(), d.at("expected").get<std::string>(), d.at("actual").get<std::string>(),
              d.at("pass").get<bool>());
    r.unverified_notes = j.at("unverified_notes").get<std::vector<std::string>>();
    if (r.pass != j.at("pass").get<bool>()) throw Error(ErrorCode::InvalidInput, "pass flag disagrees with the details");
    return r;
  });
}

std::string to_dot(const ReebGraph& G) {
  std::ostringstream os;
  os << "graph reeb {\n";
  for (std::size_t i = 0; i < G.nodes.size(); ++i) {
    const auto& n = G.nodes[i];
    os << "  n" << i << " [label=\"v" << n.vertex << " " << bsg::to_string(n.kind) << "\\n" << to_string(n.value)
       << "\"];\n";
  }
  for (const auto& e : G.edges) os << "  n" << e.lo << " -- n" << e.hi << ";\n";
  os << "}\n";
  return os.str();
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << text;
}

}  // namespace bsg::io
