#include "gog/json_io.hpp"

#include "gog/graph_builders.hpp"
#include "gog/group_catalog.hpp"

#include <fstream>
#include <sstream>

namespace gog {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::BadInput, msg); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where + ": missing field \"" + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + ": expected an integer");
  return j.get<int>();
}

int element_ref(const FiniteGroup& g, const Json& j, const std::string& where) {
  if (j.is_string()) {
    for (int x = 0; x < g.order(); ++x)
      if (g.element_name(x) == j.get<std::string>()) return x;
    bad(where + ": unknown element " + j.get<std::string>());
  }
  const int x = as_int(j, where);
  if (x < 0 || x >= g.order()) bad(where + ": element " + std::to_string(x) + " out of range");
  return x;
}

// A full element map, or an object of generator images.
GroupHom edge_map(const FiniteGroup& source, const FiniteGroup& target, const Json& j, const std::string& where) {
  if (j.is_array()) {
    GroupHom h;
    for (const auto& x : j) h.images.push_back(element_ref(target, x, where));
    if (static_cast<int>(h.images.size()) != source.order())
      throw Error(ErrorKind::DimensionMismatch, where + ": map has " + std::to_string(h.images.size()) +
                                                    " entries for a group of order " + std::to_string(source.order()));
    if (!is_homomorphism(source, target, h.images)) bad(where + ": not a homomorphism");
    return h;
  }
  if (j.is_object()) {
    std::vector<std::pair<int, int>> images;
    for (const auto& [name, y] : j.items()) images.emplace_back(element_ref(source, name, where), element_ref(target, y, where));
    return hom_from_generators(source, target, images);
  }
  bad(where + ": expected an element map");
}

// Signs on every element, from a full list or generator values.
std::vector<int> character(const FiniteGroup& g, const Json& j, const std::string& where) {
  std::vector<int> signs;
  if (j.is_array()) {
    for (const auto& s : j) signs.push_back(as_int(s, where));
    if (static_cast<int>(signs.size()) != g.order()) bad(where + ": character has the wrong length");
  } else if (j.is_object()) {
    signs.assign(static_cast<std::size_t>(g.order()), 0);
    signs[0] = 1;
    std::vector<std::pair<int, int>> gens;
    for (const auto& [name, s] : j.items()) gens.emplace_back(element_ref(g, name, where), as_int(s, where));
    for (int x = 0; x < g.order(); ++x)  // unnamed generators act trivially
      if (std::none_of(gens.begin(), gens.end(), [&](auto& p) { return p.first == x; })) {
        bool named = false;
        for (const auto& [n, idx] : g.generator_names()) named = named || idx == x;
        if (named) gens.emplace_back(x, 1);
      }
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
      const int x = frontier.back();
      frontier.pop_back();
      for (auto [a, s] : gens) {
        const int y = g.mul(x, a);
        if (signs[y] == 0) {
          signs[y] = signs[x] * s;
          frontier.push_back(y);
        }
      }
    }
    if (std::find(signs.begin(), signs.end(), 0) != signs.end()) bad(where + ": generators do not generate");
  } else {
    bad(where + ": expected a character");
  }
  for (int s : signs)
    if (s != 1 && s != -1) bad(where + ": signs must be +1 or -1");
  return signs;
}

Json invariants_json(const AbelianGroupInvariants& a) {
  Json j;
  j["free_rank"] = a.free_rank;
  j["torsion"] = Json::array();
  for (const auto& t : a.torsion) j["torsion"].push_back(t.str());
  j["str"] = a.str();
  return j;
}

}  // namespace

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path.string() + ": " + e.what());
  }
}

FiniteGroup group_from_json(const Json& j, const fs::path& base) {
  if (j.is_string()) {
    const std::string ref = j.get<std::string>();
    if (auto g = named_group(ref)) return *g;
    const fs::path p = base / ref;
    if (fs::exists(p)) return group_from_json(read_json_file(p), p.parent_path());
    bad("unknown group reference " + ref);
  }
  const std::string where = "group";
  std::vector<std::vector<int>> table;
  const Json& t = field(j, "table", where);
  if (!t.is_array()) bad("group: table must be an array of rows");
  for (const auto& row : t) {
    if (!row.is_array()) bad("group: table must be an array of rows");
    std::vector<int> r;
    for (const auto& x : row) r.push_back(as_int(x, "group table"));
    table.push_back(std::move(r));
  }
  if (j.contains("order") && as_int(j.at("order"), where) != static_cast<int>(table.size()))
    throw Error(ErrorKind::DimensionMismatch, "group: order does not match the table");
  std::map<std::string, int> gens;
  if (j.contains("generators"))
    for (const auto& [name, idx] : j.at("generators").items()) gens[name] = as_int(idx, "group generators");
  return FiniteGroup::from_table(std::move(table), std::move(gens), j.value("name", std::string{}));
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["table"] = g.table();
  j["generators"] = Json::object();
  for (const auto& [name, idx] : g.generator_names()) j["generators"][name] = idx;
  return j;
}

GraphInput graph_from_json(const Json& j, const fs::path& base) {
  std::vector<Vertex> vertices;
  std::map<std::string, int> vindex;
  for (const auto& v : field(j, "vertices", "graph")) {
    Vertex vx;
    vx.id = field(v, "id", "vertex").get<std::string>();
    const Json& g = field(v, "group", "vertex " + vx.id);
    if (!(g.is_string() && g.get<std::string>() == "one-ended")) vx.group = group_from_json(g, base);
    if (!vindex.emplace(vx.id, static_cast<int>(vertices.size())).second) bad("duplicate vertex id " + vx.id);
    vertices.push_back(std::move(vx));
  }
  auto vertex_ref = [&](const Json& r, const std::string& where) {
    if (r.is_string()) {
      const auto it = vindex.find(r.get<std::string>());
      if (it == vindex.end()) bad(where + ": unknown vertex " + r.get<std::string>());
      return it->second;
    }
    const int v = as_int(r, where);
    if (v < 0 || v >= static_cast<int>(vertices.size())) bad(where + ": vertex out of range");
    return v;
  };
  std::vector<Edge> edges;
  for (const auto& e : field(j, "edges", "graph")) {
    Edge ed;
    ed.id = field(e, "id", "edge").get<std::string>();
    const std::string where = "edge " + ed.id;
    ed.o = vertex_ref(field(e, "o", where), where);
    ed.t = vertex_ref(field(e, "t", where), where);
    ed.group = group_from_json(field(e, "group", where), base);
    if (vertices[ed.o].group) ed.into_o = edge_map(ed.group, *vertices[ed.o].group, field(e, "into_o", where), where + " into_o");
    if (vertices[ed.t].group) ed.into_t = edge_map(ed.group, *vertices[ed.t].group, field(e, "into_t", where), where + " into_t");
    edges.push_back(std::move(ed));
  }
  GraphInput in{GraphOfGroups::make(std::move(vertices), std::move(edges)), {}};
  const GraphOfGroups& g = in.graph;
  in.omega = g.trivial_omega();
  if (j.contains("omega")) {
    const Json& w = j.at("omega");
    if (w.contains("vertex_chars"))
      for (const auto& [id, c] : w.at("vertex_chars").items()) {
        const auto v = g.vertex_index(id);
        if (!v) bad("omega: unknown vertex " + id);
        if (g.vertex(*v).opaque()) bad("omega: vertex " + id + " is one-ended; give edge_chars instead");
        in.omega.vertex_signs[*v] = character(g.group(*v), c, "omega at " + id);
      }
    if (w.contains("stable_signs"))
      for (const auto& [id, s] : w.at("stable_signs").items()) {
        const auto e = g.edge_index(id);
        if (!e) bad("omega: unknown edge " + id);
        in.omega.stable_signs[*e] = as_int(s, "stable sign");
      }
    if (w.contains("edge_chars"))
      for (const auto& [id, c] : w.at("edge_chars").items()) {
        const auto e = g.edge_index(id);
        if (!e) bad("omega: unknown edge " + id);
        in.omega.opaque_edge_signs[*e] = character(g.edge(*e).group, c, "omega on edge " + id);
      }
  }
  g.check_omega(in.omega);
  return in;
}

Json graph_to_json(const GraphOfGroups& g, const OrientationCharacter& omega) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : g.vertices()) {
    Json vj;
    vj["id"] = v.id;
    vj["group"] = v.opaque() ? Json("one-ended") : group_to_json(*v.group);
    j["vertices"].push_back(vj);
  }
  j["edges"] = Json::array();
  for (const auto& e : g.edges()) {
    Json ej;
    ej["id"] = e.id;
    ej["o"] = g.vertex(e.o).id;
    ej["t"] = g.vertex(e.t).id;
    ej["group"] = group_to_json(e.group);
    ej["into_o"] = e.into_o.images;
    ej["into_t"] = e.into_t.images;
    j["edges"].push_back(ej);
  }
  Json w;
  w["vertex_chars"] = Json::object();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!g.vertex(v).opaque()) w["vertex_chars"][g.vertex(v).id] = omega.vertex_signs[v];
  w["stable_signs"] = Json::object();
  for (int e = 0; e < g.edge_count(); ++e) w["stable_signs"][g.edge(e).id] = omega.stable_signs[e];
  if (!omega.opaque_edge_signs.empty()) {
    w["edge_chars"] = Json::object();
    for (const auto& [e, s] : omega.opaque_edge_signs) w["edge_chars"][g.edge(e).id] = s;
  }
  j["omega"] = w;
  return j;
}

NormalForm parse_word(const BassSerre& bs, const std::string& text) {
  const GraphOfGroups& g = bs.graph();
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), '*', ' ');
  std::istringstream in(cleaned);
  GroupWord word;
  for (std::string tok; in >> tok;) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) bad("word syllable \"" + tok + "\" needs the form vertex:element or t:edge");
    std::string head = tok.substr(0, colon), body = tok.substr(colon + 1);
    long exponent = 1;
    if (const auto caret = body.find('^'); caret != std::string::npos) {
      try {
        exponent = std::stol(body.substr(caret + 1));
      } catch (const std::exception&) {
        bad("bad exponent in \"" + tok + "\"");
      }
      body = body.substr(0, caret);
    }
    if (head == "t" && g.edge_index(body)) {
      const int e = *g.edge_index(body);
      for (long i = 0; i < std::abs(exponent); ++i) word.push_back(Syllable{true, 0, 0, e, exponent > 0 ? 1 : -1});
      continue;
    }
    const auto v = g.vertex_index(head);
    if (!v) bad("unknown vertex or edge in \"" + tok + "\"");
    const FiniteGroup& f = g.group(*v);
    int x = -1;
    for (int y = 0; y < f.order() && x < 0; ++y)
      if (f.element_name(y) == body) x = y;
    if (x < 0) {
      try {
        std::size_t used = 0;
        x = std::stoi(body, &used);
        if (used != body.size()) throw std::invalid_argument(body);
      } catch (const std::exception&) {
        bad("unknown element \"" + body + "\" at vertex " + head);
      }
      if (x < 0 || x >= f.order()) bad("element " + body + " out of range at vertex " + head);
    }
    word.push_back(Syllable{false, *v, f.power(x, exponent), 0, 1});
  }
  return bs.from_word(word);
}

Json to_json(const AbelianGroupInvariants& a) { return invariants_json(a); }

Json to_json(const CheckReport& r) {
  Json j;
  j["n"] = r.n;
  j["verdict"] = to_string(r.overall);
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["id"] = c.id;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    cj["witness"] = c.witness;
    j["checks"].push_back(cj);
  }
  return j;
}

Json to_json(const BassSerre& bs, const FixedSubtreeReport& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["order"] = r.order;
  j["center"] = bs.str(r.center);
  j["vertices_found"] = r.vertices.size();
  j["edge_count"] = r.edge_count;
  j["radius"] = r.radius;
  j["translation"] = r.translation ? Json(bs.str(*r.translation)) : Json(nullptr);
  j["translation_length"] = r.translation_length;
  j["ends"] = r.ends;
  j["xi"] = r.xi ? Json(*r.xi) : Json("infinite");
  j["normalizer"] = to_string(bs.normalizer_class(r));
  j["note"] = r.note;
  return j;
}

Json to_json(const BassSerre& bs, const ChiswellResult& r) {
  const auto orbit = [&](const ChiswellOrbit& o) {
    Json j;
    j["representative"] = bs.str(o.representative);
    j["size"] = o.size;
    j["stabilizer_order"] = o.stabilizer_order;
    j["twist"] = o.twist;
    j["boundary"] = o.boundary;
    return j;
  };
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["witness"] = r.witness;
  j["order"] = r.data.order;
  j["omega"] = r.data.omega;
  j["exact"] = r.data.exact_computation;
  j["branching"] = r.data.branching;
  j["targets"] = r.data.targets;
  j["windows"] = Json::array();
  for (const auto& w : r.data.windows) {
    Json wj;
    wj["radius"] = w.radius;
    wj["vertex_orbits"] = Json::array();
    for (const auto& o : w.vertex_orbits) wj["vertex_orbits"].push_back(orbit(o));
    wj["edge_orbits"] = Json::array();
    for (const auto& o : w.edge_orbits) wj["edge_orbits"].push_back(orbit(o));
    wj["vertex_h1"] = invariants_json(w.vertex_h1);
    wj["edge_h1"] = invariants_json(w.edge_h1);
    wj["delta"] = Json::array();
    for (Eigen::Index row = 0; row < w.delta.rows(); ++row) {
      Json rj = Json::array();
      for (Eigen::Index col = 0; col < w.delta.cols(); ++col) rj.push_back(w.delta(row, col).to_int64());
      wj["delta"].push_back(rj);
    }
    wj["cokernel"] = invariants_json(w.cokernel);
    wj["injective"] = w.injective;
    j["windows"].push_back(wj);
  }
  return j;
}

Json to_json(const TorusVerdict& v) {
  Json j;
  j["verdict"] = v.str();
  j["realizable"] = v.realizable;
  j["orientable"] = v.orientable;
  j["period"] = v.period ? Json(*v.period) : Json(nullptr);
  j["multiplier"] = v.multiplier ? Json(*v.multiplier) : Json(nullptr);
  j["reason"] = v.reason;
  return j;
}

Json to_json(const EnumeratedGraph& e) {
  Json j;
  j["index"] = e.index;
  j["graph"] = graph_to_json(e.graph, e.graph.trivial_omega());
  j["report"] = to_json(e.report);
  return j;
}

}  // namespace gog
