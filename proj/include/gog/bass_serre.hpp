#pragma once

#include "gog/graph_of_groups.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gog {

/// Normal form of a path in the fundamental groupoid:
///   r_0 y_1 r_1 y_2 ... r_{k-1} y_k tail
/// where y_i are stable letters (edge, sign), r_i run over fixed left
/// transversals and no y_i r_i y_{i+1} is a pinch. Letter 2e is t_e, which sits
/// between G_{t(e)} on its left and G_{o(e)} on its right; letter 2e+1 is t_e^-1.
struct NormalForm {
  int start = 0;
  std::vector<int> reps;
  std::vector<int> letters;
  int tail = 0;

  int length() const { return static_cast<int>(letters.size()); }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

/// A syllable of a word in presentation terms: a vertex-group element or a
/// stable letter t_e^{+-1}. Tree-edge letters are allowed and act trivially.
struct Syllable {
  bool stable = false;
  int vertex = 0;   // element syllable
  int element = 0;
  int edge = 0;     // stable syllable
  int sign = 1;
};

using GroupWord = std::vector<Syllable>;

/// w = conjugator * element * conjugator^-1 with element in G_vertex.
struct Elliptic {
  int order = 1;
  NormalForm conjugator;
  int vertex = 0;
  int element = 0;
};

struct ElementOrder {
  bool finite = false;
  int order = 0;  // when finite
  std::string str() const { return finite ? std::to_string(order) : "Infinite"; }
};

struct TreeBall {
  std::vector<NormalForm> vertices;          // canonical coset representatives, tail = 1
  std::vector<int> distance;                 // from the center
  std::vector<std::pair<int, int>> edges;    // indices into vertices
};

enum class FixedKind { Finite, Line, Branching, Unresolved };
const char* to_string(FixedKind k);

struct FixedSubtreeReport {
  FixedKind kind = FixedKind::Unresolved;
  int order = 1;
  NormalForm center;                        // a fixed vertex s
  std::vector<NormalForm> vertices;         // fixed vertices found, breadth-first from s
  std::vector<int> distance;
  int edge_count = 0;                       // fixed edges among the vertices found
  int radius = 0;                           // largest distance reached
  std::optional<NormalForm> translation;    // Line: normalizing hyperbolic element z
  int translation_length = 0;
  std::optional<std::pair<NormalForm, NormalForm>> independent;  // Branching witnesses
  int ends = 0;                             // 0 finite, 2 line, -1 for at least three
  int infinite_stabilizers = 0;             // always 0 with finite vertex groups
  std::optional<int> xi;                    // e + inf - 1; nullopt means infinite
  std::string note;
};

enum class NormalizerClass { FiniteWithWitness, TwoEnded, ContainsFreeGroup, Unresolved };
const char* to_string(NormalizerClass c);

/// Word problem, normal forms and local exploration of the Bass-Serre tree.
/// All normal forms are relative to transversal tables frozen at construction.
class BassSerre {
 public:
  explicit BassSerre(const GraphOfGroups& g, int base = 0);
  BassSerre(GraphOfGroups&&, int = 0) = delete;  // keeps a reference to the graph

  const GraphOfGroups& graph() const { return *graph_; }
  int base() const { return base_; }

  static int letter(int edge, int sign) { return 2 * edge + (sign > 0 ? 0 : 1); }
  static int letter_edge(int y) { return y / 2; }
  static int letter_sign(int y) { return y % 2 == 0 ? 1 : -1; }
  int left(int y) const { return letters_[static_cast<std::size_t>(y)].left; }
  int right(int y) const { return letters_[static_cast<std::size_t>(y)].right; }
  int end(const NormalForm& x) const { return x.letters.empty() ? x.start : right(x.letters.back()); }

  NormalForm identity(int vertex) const;
  NormalForm identity() const { return identity(base_); }
  void push_element(NormalForm& x, int g) const;
  void push_letter(NormalForm& x, int y) const;
  NormalForm multiply(const NormalForm& a, const NormalForm& b) const;
  NormalForm inverse(const NormalForm& a) const;
  NormalForm power(const NormalForm& a, long long k) const;
  NormalForm conjugate(const NormalForm& x, const NormalForm& w) const;  // x w x^-1
  bool is_identity(const NormalForm& a) const;

  /// Tree path gamma_v from the base vertex to v.
  const NormalForm& tree_path(int v) const { return paths_[static_cast<std::size_t>(v)]; }
  /// gamma_v g gamma_v^-1.
  NormalForm vertex_element(int v, int g) const;
  /// gamma_{t(e)} t_e gamma_{o(e)}^-1 (identity for tree edges).
  NormalForm stable_letter(int e) const;
  NormalForm from_word(const GroupWord& w) const;

  int omega(const OrientationCharacter& w, const NormalForm& x) const;

  std::optional<Elliptic> elliptic(const NormalForm& w) const;
  ElementOrder element_order(const NormalForm& w) const;
  std::string str(const NormalForm& x) const;

  // ---- the tree ------------------------------------------------------------
  /// Vertex x G_v for the path x; the tail is dropped.
  NormalForm vertex_of(NormalForm x) const;
  NormalForm root() const { return identity(); }
  int vertex_type(const NormalForm& v) const { return end(v); }
  std::vector<NormalForm> neighbours(const NormalForm& v) const;
  int degree(int vertex_type) const;
  NormalForm act(const NormalForm& g, const NormalForm& v) const;
  int distance(const NormalForm& a, const NormalForm& b) const;
  /// Vertices on the geodesic from a to b, both included.
  std::vector<NormalForm> geodesic(const NormalForm& a, const NormalForm& b) const;
  /// The endpoint of an edge nearer the root, given its farther endpoint.
  NormalForm parent(const NormalForm& child) const;
  /// True when the farther endpoint `child` is the o-end of its edge.
  bool child_is_origin(const NormalForm& child) const { return letter_sign(child.letters.back()) > 0; }
  bool fixes(const NormalForm& g, const NormalForm& v) const;

  TreeBall ball(const NormalForm& center, int radius) const;

  /// Fixed subtree of a finite-order element. Throws NotFiniteOrder.
  FixedSubtreeReport fixed_subtree(const NormalForm& w, int max_radius = 8, int max_vertices = 4000) const;
  NormalizerClass normalizer_class(const FixedSubtreeReport& r) const;

  /// Representatives g != 1 of conjugacy classes of each vertex group, as (v, g).
  std::vector<std::pair<int, int>> vertex_class_reps() const;

 private:
  struct LetterTable {
    int left = 0;
    int right = 0;
    ElementSet passing = 0;          // A_y in G_left: a y = y pass[a]
    std::vector<int> pass;           // G_left -> G_right on A_y, -1 elsewhere
    std::vector<int> rep;            // g -> representative of g A_y
    std::vector<int> reps;           // distinct representatives, identity first
  };

  const FiniteGroup& vgroup(int v) const { return graph_->group(v); }
  bool normalizes(const NormalForm& z, const NormalForm& w, int order) const;

  const GraphOfGroups* graph_;
  int base_;
  std::vector<LetterTable> letters_;
  std::vector<NormalForm> paths_;
  std::vector<std::vector<int>> letters_at_;  // vertex -> letters with that left vertex
};

}  // namespace gog
