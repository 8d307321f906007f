#pragma once

#include "gog/finite_group.hpp"
#include "gog/integer.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gog {

/// A vertex carries a finite group, or is an opaque one-ended group known only by name.
struct Vertex {
  std::string id;
  std::optional<FiniteGroup> group;  // nullopt: opaque one-ended vertex

  bool opaque() const { return !group.has_value(); }
};

/// Edge e with monomorphisms into_o: G_e -> G_{o(e)} and into_t = phi_e: G_e -> G_{t(e)}.
/// The stable letter satisfies t_e into_o(x) t_e^-1 = into_t(x). A map into an
/// opaque vertex is left empty.
struct Edge {
  std::string id;
  int o = 0;
  int t = 0;
  FiniteGroup group;
  GroupHom into_o;
  GroupHom into_t;
};

/// The orientation character omega, given vertex-wise plus a sign per stable letter.
struct OrientationCharacter {
  std::vector<std::vector<int>> vertex_signs;          // per finite vertex: sign of each element
  std::map<int, std::vector<int>> opaque_edge_signs;   // edge -> sign of each G_e element (opaque ends)
  std::vector<int> stable_signs;                       // per edge; tree edges are +1

  /// omega(x) for x in G_e, read from whichever endpoint is finite.
  int on_edge_group(const class GraphOfGroups& g, int edge, int x) const;
};

enum class EdgeKind { LoopIsomorphism, MCTie, Proper };

struct EdgeClass {
  EdgeKind kind = EdgeKind::Proper;
  std::optional<int> index_o;  // [G_o : G_e]; nullopt at an opaque vertex
  std::optional<int> index_t;
  std::string str() const;
};

struct Finding {
  std::string name;  // "WellFormed", "Reduced", "Indecomposable"
  bool holds = true;
  std::string witness;
};

enum class Ends { Zero, Two, Infinite };
const char* to_string(Ends e);

class GraphOfGroups {
 public:
  /// Validates connectivity and edge maps, then fixes the maximal tree (Kruskal
  /// over edges in lexicographic id order). Throws Disconnected or NonInjectiveEdgeMap.
  static GraphOfGroups make(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const FiniteGroup& group(int v) const;  // throws UnsupportedOpaqueVertex
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::optional<int> vertex_index(const std::string& id) const;
  std::optional<int> edge_index(const std::string& id) const;

  bool in_tree(int e) const { return tree_[static_cast<std::size_t>(e)]; }
  bool all_finite() const;
  /// Number of edge ends at v (a loop counts twice).
  int valence(int v) const;

  /// Trivial orientation character.
  OrientationCharacter trivial_omega() const;
  /// Checks that omega is a homomorphism on each vertex group, agrees across
  /// every edge, and is +1 on tree edges. Throws BadOrientation with a witness.
  void check_omega(const OrientationCharacter& omega) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<bool> tree_;
};

std::vector<Finding> validate(const GraphOfGroups& g);
bool is_reduced(const GraphOfGroups& g);
bool is_indecomposable(const GraphOfGroups& g);

EdgeClass classify_edge(const GraphOfGroups& g, int e);
std::vector<EdgeClass> classify_edges(const GraphOfGroups& g);

/// Sum over vertices of 1/|G_v| minus sum over edges of 1/|G_e|.
Rational virtual_euler(const GraphOfGroups& g);

/// Ends of the fundamental group, for graphs with finite vertex groups.
Ends ends_count(const GraphOfGroups& g);

/// Image of x in G_e inside the vertex group at the t-end (at_t) or the o-end.
int edge_image(const GraphOfGroups& g, int e, int x, bool at_t);

}  // namespace gog
