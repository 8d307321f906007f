#include "gog/graph_of_groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gog {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

void check_edge_map(const Edge& e, const Vertex& v, const GroupHom& map, const char* side) {
  if (v.opaque()) return;
  const std::string where = "edge " + e.id + " (" + side + " map into " + v.id + ")";
  if (!is_homomorphism(e.group, *v.group, map.images))
    throw Error(ErrorKind::NonInjectiveEdgeMap, where + " is not a homomorphism");
  if (!map.injective()) {
    for (int x = 1; x < e.group.order(); ++x)
      if (map(x) == 0)
        throw Error(ErrorKind::NonInjectiveEdgeMap,
                    where + " is not injective: element " + std::to_string(x) + " maps to the identity");
  }
}

bool is_sign_character(const FiniteGroup& g, const std::vector<int>& s) {
  if (static_cast<int>(s.size()) != g.order()) return false;
  for (int x : s)
    if (x != 1 && x != -1) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (s[static_cast<std::size_t>(g.mul(a, b))] != s[static_cast<std::size_t>(a)] * s[static_cast<std::size_t>(b)])
        return false;
  return true;
}

}  // namespace

const char* to_string(Ends e) {
  switch (e) {
    case Ends::Zero: return "0";
    case Ends::Two: return "2";
    case Ends::Infinite: return "infinity";
  }
  return "?";
}

std::string EdgeClass::str() const {
  switch (kind) {
    case EdgeKind::LoopIsomorphism: return "LoopIsomorphism";
    case EdgeKind::MCTie: return "MCTie";
    case EdgeKind::Proper: {
      auto idx = [](const std::optional<int>& i) { return i ? std::to_string(*i) : std::string("inf"); };
      return "Proper(" + idx(index_o) + "," + idx(index_t) + ")";
    }
  }
  return "?";
}

GraphOfGroups GraphOfGroups::make(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  if (vertices.empty()) throw Error(ErrorKind::BadInput, "graph has no vertices");
  const int nv = static_cast<int>(vertices.size());
  for (const auto& e : edges) {
    if (e.o < 0 || e.o >= nv || e.t < 0 || e.t >= nv)
      throw Error(ErrorKind::BadInput, "edge " + e.id + " has an endpoint out of range");
    check_edge_map(e, vertices[e.o], e.into_o, "origin");
    check_edge_map(e, vertices[e.t], e.into_t, "target");
  }
  GraphOfGroups g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.tree_.assign(g.edges_.size(), false);

  std::vector<int> order(g.edges_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.edges_[a].id < g.edges_[b].id; });
  UnionFind uf(nv);
  for (int e : order)
    if (uf.unite(g.edges_[e].o, g.edges_[e].t)) g.tree_[e] = true;
  for (int v = 1; v < nv; ++v)
    if (uf.find(v) != uf.find(0))
      throw Error(ErrorKind::Disconnected, "vertex " + g.vertices_[v].id + " is not connected to " + g.vertices_[0].id);
  return g;
}

const FiniteGroup& GraphOfGroups::group(int v) const {
  const auto& vx = vertex(v);
  if (vx.opaque()) throw Error(ErrorKind::UnsupportedOpaqueVertex, "vertex " + vx.id + " is one-ended");
  return *vx.group;
}

std::optional<int> GraphOfGroups::vertex_index(const std::string& id) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (vertices_[v].id == id) return v;
  return std::nullopt;
}

std::optional<int> GraphOfGroups::edge_index(const std::string& id) const {
  for (int e = 0; e < edge_count(); ++e)
    if (edges_[e].id == id) return e;
  return std::nullopt;
}

bool GraphOfGroups::all_finite() const {
  return std::none_of(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return v.opaque(); });
}

int GraphOfGroups::valence(int v) const {
  int n = 0;
  for (const auto& e : edges_) n += (e.o == v) + (e.t == v);
  return n;
}

OrientationCharacter GraphOfGroups::trivial_omega() const {
  OrientationCharacter w;
  for (const auto& v : vertices_)
    w.vertex_signs.emplace_back(v.opaque() ? 0 : static_cast<std::size_t>(v.group->order()), 1);
  for (int e = 0; e < edge_count(); ++e)
    if (vertex(edges_[e].o).opaque() && vertex(edges_[e].t).opaque())
      w.opaque_edge_signs[e] = std::vector<int>(static_cast<std::size_t>(edges_[e].group.order()), 1);
  w.stable_signs.assign(edges_.size(), 1);
  return w;
}

int OrientationCharacter::on_edge_group(const GraphOfGroups& g, int edge, int x) const {
  const Edge& e = g.edge(edge);
  if (!g.vertex(e.o).opaque()) return vertex_signs[static_cast<std::size_t>(e.o)][static_cast<std::size_t>(e.into_o(x))];
  if (!g.vertex(e.t).opaque()) return vertex_signs[static_cast<std::size_t>(e.t)][static_cast<std::size_t>(e.into_t(x))];
  return opaque_edge_signs.at(edge)[static_cast<std::size_t>(x)];
}

void GraphOfGroups::check_omega(const OrientationCharacter& omega) const {
  if (static_cast<int>(omega.vertex_signs.size()) != vertex_count())
    throw Error(ErrorKind::BadOrientation, "one sign vector per vertex expected");
  if (static_cast<int>(omega.stable_signs.size()) != edge_count())
    throw Error(ErrorKind::BadOrientation, "one stable sign per edge expected");
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertex(v).opaque()) continue;
    if (!is_sign_character(*vertex(v).group, omega.vertex_signs[v]))
      throw Error(ErrorKind::BadOrientation, "signs at vertex " + vertex(v).id + " are not a character");
  }
  for (int e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    const int s = omega.stable_signs[e];
    if (s != 1 && s != -1) throw Error(ErrorKind::BadOrientation, "stable sign of " + ed.id + " must be +1 or -1");
    if (tree_[e] && s != 1)
      throw Error(ErrorKind::BadOrientation, "tree edge " + ed.id + " must have stable sign +1");
    const auto declared = omega.opaque_edge_signs.find(e);
    if (declared != omega.opaque_edge_signs.end() && !is_sign_character(ed.group, declared->second))
      throw Error(ErrorKind::BadOrientation, "declared signs on edge " + ed.id + " are not a character");
    if (vertex(ed.o).opaque() && vertex(ed.t).opaque() && declared == omega.opaque_edge_signs.end())
      throw Error(ErrorKind::BadOrientation, "edge " + ed.id + " joins opaque vertices and needs declared signs");
    for (int x = 0; x < ed.group.order(); ++x) {
      std::vector<int> seen;
      if (!vertex(ed.o).opaque()) seen.push_back(omega.vertex_signs[ed.o][ed.into_o(x)]);
      if (!vertex(ed.t).opaque()) seen.push_back(omega.vertex_signs[ed.t][ed.into_t(x)]);
      if (declared != omega.opaque_edge_signs.end()) seen.push_back(declared->second[x]);
      if (std::adjacent_find(seen.begin(), seen.end(), std::not_equal_to<>()) != seen.end())
        throw Error(ErrorKind::BadOrientation,
                    "omega disagrees across edge " + ed.id + " at element " + std::to_string(x));
    }
  }
}

std::vector<Finding> validate(const GraphOfGroups& g) {
  std::vector<Finding> out;
  out.push_back({"WellFormed", true, ""});
  Finding reduced{"Reduced", true, ""};
  for (const auto& e : g.edges()) {
    if (e.o == e.t) continue;
    for (int end : {e.o, e.t}) {
      const auto& v = g.vertex(end);
      if (!v.opaque() && v.group->order() == e.group.order()) {
        reduced.holds = false;
        reduced.witness = "edge " + e.id + " maps onto " + v.id;
        break;
      }
    }
    if (!reduced.holds) break;
  }
  out.push_back(reduced);
  Finding indec{"Indecomposable", true, ""};
  for (const auto& e : g.edges())
    if (e.group.order() == 1) {
      indec.holds = false;
      indec.witness = "edge " + e.id + " has trivial group";
      break;
    }
  out.push_back(indec);
  return out;
}

bool is_reduced(const GraphOfGroups& g) { return validate(g)[1].holds; }
bool is_indecomposable(const GraphOfGroups& g) { return validate(g)[2].holds; }

EdgeClass classify_edge(const GraphOfGroups& g, int e) {
  const Edge& ed = g.edge(e);
  EdgeClass c;
  auto index = [&](int v) -> std::optional<int> {
    if (g.vertex(v).opaque()) return std::nullopt;
    return g.vertex(v).group->order() / ed.group.order();
  };
  c.index_o = index(ed.o);
  c.index_t = index(ed.t);
  if (ed.o == ed.t && c.index_o == 1 && c.index_t == 1)
    c.kind = EdgeKind::LoopIsomorphism;
  else if (ed.o != ed.t && c.index_o == 2 && c.index_t == 2)
    c.kind = EdgeKind::MCTie;
  else
    c.kind = EdgeKind::Proper;
  return c;
}

std::vector<EdgeClass> classify_edges(const GraphOfGroups& g) {
  std::vector<EdgeClass> out;
  for (int e = 0; e < g.edge_count(); ++e) out.push_back(classify_edge(g, e));
  return out;
}

Rational virtual_euler(const GraphOfGroups& g) {
  Rational chi(0);
  for (int v = 0; v < g.vertex_count(); ++v) chi += Rational(1, g.group(v).order());
  for (const auto& e : g.edges()) chi -= Rational(1, e.group.order());
  return chi;
}

Ends ends_count(const GraphOfGroups& g) {
  const Rational chi = virtual_euler(g);
  if (g.edge_count() == 0) return Ends::Zero;
  if (chi > Rational(0))
    throw Error(ErrorKind::PositiveEulerNontrivial, "virtual Euler characteristic " + to_string(chi) +
                                                        " is positive on a graph with edges");
  return chi == Rational(0) ? Ends::Two : Ends::Infinite;
}

int edge_image(const GraphOfGroups& g, int e, int x, bool at_t) {
  const Edge& ed = g.edge(e);
  return at_t ? ed.into_t(x) : ed.into_o(x);
}

}  // namespace gog
