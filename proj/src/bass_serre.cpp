#include "gog/bass_serre.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gog {

const char* to_string(FixedKind k) {
  switch (k) {
    case FixedKind::Finite: return "Finite";
    case FixedKind::Line: return "Line";
    case FixedKind::Branching: return "Branching";
    case FixedKind::Unresolved: return "Unresolved";
  }
  return "?";
}

const char* to_string(NormalizerClass c) {
  switch (c) {
    case NormalizerClass::FiniteWithWitness: return "FiniteWithWitness";
    case NormalizerClass::TwoEnded: return "TwoEnded";
    case NormalizerClass::ContainsFreeGroup: return "ContainsFreeGroup";
    case NormalizerClass::Unresolved: return "Unresolved";
  }
  return "?";
}

BassSerre::BassSerre(const GraphOfGroups& g, int base) : graph_(&g), base_(base) {
  for (int v = 0; v < g.vertex_count(); ++v) (void)g.group(v);  // finite vertex groups only
  letters_at_.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    for (int sign : {1, -1}) {
      // t_e: phi(x) t_e = t_e incl(x); t_e^-1: incl(x) t_e^-1 = t_e^-1 phi(x).
      LetterTable lt;
      lt.left = sign > 0 ? ed.t : ed.o;
      lt.right = sign > 0 ? ed.o : ed.t;
      const GroupHom& into_left = sign > 0 ? ed.into_t : ed.into_o;
      const GroupHom& into_right = sign > 0 ? ed.into_o : ed.into_t;
      const FiniteGroup& gl = vgroup(lt.left);
      lt.pass.assign(static_cast<std::size_t>(gl.order()), -1);
      for (int x = 0; x < ed.group.order(); ++x) {
        lt.passing |= ElementSet{1} << into_left(x);
        lt.pass[static_cast<std::size_t>(into_left(x))] = into_right(x);
      }
      lt.rep.assign(static_cast<std::size_t>(gl.order()), -1);
      for (int x = 0; x < gl.order(); ++x) {
        if (lt.rep[static_cast<std::size_t>(x)] >= 0) continue;
        // x is the least element of its coset x A since lower cosets are filled.
        for (int a : elements_of(lt.passing)) lt.rep[static_cast<std::size_t>(gl.mul(x, a))] = x;
        lt.reps.push_back(x);
      }
      letters_at_[static_cast<std::size_t>(lt.left)].push_back(static_cast<int>(letters_.size()));
      letters_.push_back(std::move(lt));
    }
  }

  paths_.assign(static_cast<std::size_t>(g.vertex_count()), NormalForm{});
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  paths_[static_cast<std::size_t>(base)] = identity(base);
  seen[static_cast<std::size_t>(base)] = true;
  std::vector<int> queue{base};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int c = queue[head];
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!g.in_tree(e)) continue;
      const Edge& ed = g.edge(e);
      int y = -1, n = -1;
      if (ed.t == c) y = letter(e, 1), n = ed.o;
      else if (ed.o == c) y = letter(e, -1), n = ed.t;
      if (y < 0 || seen[static_cast<std::size_t>(n)]) continue;
      seen[static_cast<std::size_t>(n)] = true;
      NormalForm p = paths_[static_cast<std::size_t>(c)];
      push_letter(p, y);
      paths_[static_cast<std::size_t>(n)] = std::move(p);
      queue.push_back(n);
    }
  }
}

NormalForm BassSerre::identity(int vertex) const {
  NormalForm x;
  x.start = vertex;
  return x;
}

void BassSerre::push_element(NormalForm& x, int g) const { x.tail = vgroup(end(x)).mul(x.tail, g); }

void BassSerre::push_letter(NormalForm& x, int y) const {
  const LetterTable& lt = letters_[static_cast<std::size_t>(y)];
  if (lt.left != end(x)) throw Error(ErrorKind::BadInput, "letter does not continue the path");
  if (!x.letters.empty() && x.letters.back() == (y ^ 1) && contains(lt.passing, x.tail)) {
    // y^-1 a y with a in the passing subgroup collapses into the previous vertex group.
    const int collapsed = lt.pass[static_cast<std::size_t>(x.tail)];
    const int r = x.reps.back();
    x.reps.pop_back();
    x.letters.pop_back();
    x.tail = vgroup(end(x)).mul(r, collapsed);
    return;
  }
  const FiniteGroup& gl = vgroup(lt.left);
  const int r = lt.rep[static_cast<std::size_t>(x.tail)];
  const int a = gl.mul(gl.inv(r), x.tail);
  x.reps.push_back(r);
  x.letters.push_back(y);
  x.tail = lt.pass[static_cast<std::size_t>(a)];
}

NormalForm BassSerre::multiply(const NormalForm& a, const NormalForm& b) const {
  if (end(a) != b.start) throw Error(ErrorKind::BadInput, "paths do not compose");
  NormalForm x = a;
  for (int i = 0; i < b.length(); ++i) {
    push_element(x, b.reps[static_cast<std::size_t>(i)]);
    push_letter(x, b.letters[static_cast<std::size_t>(i)]);
  }
  push_element(x, b.tail);
  return x;
}

NormalForm BassSerre::inverse(const NormalForm& a) const {
  NormalForm x = identity(end(a));
  push_element(x, vgroup(end(a)).inv(a.tail));
  for (int i = a.length() - 1; i >= 0; --i) {
    const int y = a.letters[static_cast<std::size_t>(i)];
    push_letter(x, y ^ 1);
    push_element(x, vgroup(left(y)).inv(a.reps[static_cast<std::size_t>(i)]));
  }
  return x;
}

NormalForm BassSerre::power(const NormalForm& a, long long k) const {
  NormalForm base = k < 0 ? inverse(a) : a;
  if (k < 0) k = -k;
  NormalForm out = identity(a.start);
  while (k > 0) {
    if (k & 1) out = multiply(out, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return out;
}

NormalForm BassSerre::conjugate(const NormalForm& x, const NormalForm& w) const {
  return multiply(multiply(x, w), inverse(x));
}

bool BassSerre::is_identity(const NormalForm& a) const { return a.letters.empty() && a.tail == 0; }

NormalForm BassSerre::vertex_element(int v, int g) const {
  NormalForm x = tree_path(v);
  push_element(x, g);
  return multiply(x, inverse(tree_path(v)));
}

NormalForm BassSerre::stable_letter(int e) const {
  if (graph_->in_tree(e)) return identity();
  const Edge& ed = graph_->edge(e);
  NormalForm x = tree_path(ed.t);
  push_letter(x, letter(e, 1));
  return multiply(x, inverse(tree_path(ed.o)));
}

NormalForm BassSerre::from_word(const GroupWord& w) const {
  NormalForm x = identity();
  for (const auto& s : w) {
    if (s.stable) {
      if (s.edge < 0 || s.edge >= graph_->edge_count()) throw Error(ErrorKind::BadInput, "edge out of range");
      const NormalForm t = stable_letter(s.edge);
      x = multiply(x, s.sign > 0 ? t : inverse(t));
    } else {
      if (s.vertex < 0 || s.vertex >= graph_->vertex_count() || s.element < 0 ||
          s.element >= vgroup(s.vertex).order())
        throw Error(ErrorKind::BadInput, "vertex element out of range");
      x = multiply(x, vertex_element(s.vertex, s.element));
    }
  }
  return x;
}

int BassSerre::omega(const OrientationCharacter& w, const NormalForm& x) const {
  int s = 1;
  for (int i = 0; i < x.length(); ++i) {
    const int y = x.letters[static_cast<std::size_t>(i)];
    s *= w.vertex_signs[static_cast<std::size_t>(left(y))][static_cast<std::size_t>(x.reps[static_cast<std::size_t>(i)])];
    s *= w.stable_signs[static_cast<std::size_t>(letter_edge(y))];
  }
  return s * w.vertex_signs[static_cast<std::size_t>(end(x))][static_cast<std::size_t>(x.tail)];
}

std::optional<Elliptic> BassSerre::elliptic(const NormalForm& w) const {
  if (end(w) != w.start) throw Error(ErrorKind::BadInput, "not a closed path");
  NormalForm conj = identity(w.start);
  NormalForm cur = w;
  while (cur.length() > 0) {
    const int y1 = cur.letters.front();
    const int g0 = cur.reps.front();
    const int wrap = vgroup(cur.start).mul(cur.tail, g0);
    // Cyclically reduced words of positive length are hyperbolic.
    if (cur.letters.back() != (y1 ^ 1) || !contains(letters_[static_cast<std::size_t>(y1)].passing, wrap))
      return std::nullopt;
    NormalForm step = identity(cur.start);
    push_element(step, g0);
    push_letter(step, y1);
    cur = multiply(multiply(inverse(step), cur), step);
    conj = multiply(conj, step);
  }
  Elliptic e;
  e.conjugator = conj;
  e.vertex = cur.start;
  e.element = cur.tail;
  e.order = vgroup(cur.start).element_order(cur.tail);
  return e;
}

ElementOrder BassSerre::element_order(const NormalForm& w) const {
  const auto e = elliptic(w);
  if (!e) return {false, 0};
  return {true, e->order};
}

std::string BassSerre::str(const NormalForm& x) const {
  std::ostringstream os;
  bool any = false;
  auto element = [&](int v, int g) {
    if (g == 0) return;
    os << (any ? " " : "") << graph_->vertex(v).id << ":" << vgroup(v).element_name(g);
    any = true;
  };
  for (int i = 0; i < x.length(); ++i) {
    const int y = x.letters[static_cast<std::size_t>(i)];
    element(left(y), x.reps[static_cast<std::size_t>(i)]);
    os << (any ? " " : "") << "t_" << graph_->edge(letter_edge(y)).id << (letter_sign(y) < 0 ? "^-1" : "");
    any = true;
  }
  element(end(x), x.tail);
  return any ? os.str() : "1";
}

// ---- tree ---------------------------------------------------------------------

NormalForm BassSerre::vertex_of(NormalForm x) const {
  x.tail = 0;
  return x;
}

std::vector<NormalForm> BassSerre::neighbours(const NormalForm& v) const {
  std::vector<NormalForm> out;
  for (int y : letters_at_[static_cast<std::size_t>(end(v))])
    for (int r : letters_[static_cast<std::size_t>(y)].reps) {
      NormalForm n = v;
      push_element(n, r);
      push_letter(n, y);
      out.push_back(vertex_of(std::move(n)));
    }
  return out;
}

int BassSerre::degree(int vertex_type) const {
  int d = 0;
  for (int y : letters_at_[static_cast<std::size_t>(vertex_type)])
    d += static_cast<int>(letters_[static_cast<std::size_t>(y)].reps.size());
  return d;
}

NormalForm BassSerre::act(const NormalForm& g, const NormalForm& v) const { return vertex_of(multiply(g, v)); }

namespace {

int common_prefix(const NormalForm& a, const NormalForm& b) {
  int j = 0;
  while (j < a.length() && j < b.length() && a.reps[static_cast<std::size_t>(j)] == b.reps[static_cast<std::size_t>(j)] &&
         a.letters[static_cast<std::size_t>(j)] == b.letters[static_cast<std::size_t>(j)])
    ++j;
  return j;
}

NormalForm prefix(const NormalForm& a, int depth) {
  NormalForm p;
  p.start = a.start;
  p.reps.assign(a.reps.begin(), a.reps.begin() + depth);
  p.letters.assign(a.letters.begin(), a.letters.begin() + depth);
  return p;
}

}  // namespace

int BassSerre::distance(const NormalForm& a, const NormalForm& b) const {
  return a.length() + b.length() - 2 * common_prefix(a, b);
}

std::vector<NormalForm> BassSerre::geodesic(const NormalForm& a, const NormalForm& b) const {
  const int j = common_prefix(a, b);
  std::vector<NormalForm> out;
  for (int d = a.length(); d >= j; --d) out.push_back(prefix(a, d));
  for (int d = j + 1; d <= b.length(); ++d) out.push_back(prefix(b, d));
  return out;
}

NormalForm BassSerre::parent(const NormalForm& child) const {
  if (child.length() == 0) throw Error(ErrorKind::BadInput, "the root has no parent");
  return prefix(child, child.length() - 1);
}

bool BassSerre::fixes(const NormalForm& g, const NormalForm& v) const { return act(g, v) == v; }

TreeBall BassSerre::ball(const NormalForm& center, int radius) const {
  TreeBall b;
  std::map<NormalForm, int> index;
  const NormalForm c = vertex_of(center);
  index[c] = 0;
  b.vertices.push_back(c);
  b.distance.push_back(0);
  for (std::size_t head = 0; head < b.vertices.size(); ++head) {
    if (b.distance[head] >= radius) continue;
    const NormalForm x = b.vertices[head];
    for (auto& n : neighbours(x)) {
      if (index.contains(n)) continue;
      const int id = static_cast<int>(b.vertices.size());
      index[n] = id;
      b.vertices.push_back(std::move(n));
      b.distance.push_back(b.distance[head] + 1);
      b.edges.emplace_back(static_cast<int>(head), id);
    }
  }
  return b;
}

bool BassSerre::normalizes(const NormalForm& z, const NormalForm& w, int order) const {
  const NormalForm c = conjugate(z, w);
  NormalForm p = w;
  for (int i = 1; i < order; ++i) {
    if (p == c) return true;
    p = multiply(p, w);
  }
  return false;
}

FixedSubtreeReport BassSerre::fixed_subtree(const NormalForm& w, int max_radius, int max_vertices) const {
  if (w.start != base_) throw Error(ErrorKind::BadInput, "element must be based at the base vertex");
  const auto ell = elliptic(w);
  if (!ell) throw Error(ErrorKind::NotFiniteOrder, str(w) + " has infinite order");
  if (ell->order == 1) throw Error(ErrorKind::TrivialElement, "the identity fixes every vertex");

  FixedSubtreeReport rep;
  rep.order = ell->order;
  const NormalForm s = vertex_of(ell->conjugator);
  const FiniteGroup& gs = vgroup(ell->vertex);
  rep.center = s;

  // Breadth-first search carrying h_X = X^-1 w X in the vertex group of X.
  std::map<NormalForm, int> index;
  std::vector<int> local;
  std::vector<int> fixed_degree;
  rep.vertices.push_back(s);
  rep.distance.push_back(0);
  local.push_back(gs.conj(ell->conjugator.tail, ell->element));
  index[s] = 0;
  bool truncated = false;
  for (std::size_t head = 0; head < rep.vertices.size(); ++head) {
    const NormalForm x = rep.vertices[head];
    const int hx = local[head];
    const FiniteGroup& gx = vgroup(end(x));
    int deg = 0;
    for (int y : letters_at_[static_cast<std::size_t>(end(x))]) {
      const LetterTable& lt = letters_[static_cast<std::size_t>(y)];
      for (int r : lt.reps) {
        const int c = gx.mul(gx.mul(gx.inv(r), hx), r);
        if (!contains(lt.passing, c)) continue;
        ++deg;
        if (rep.distance[head] >= max_radius) continue;
        NormalForm n = x;
        push_element(n, r);
        push_letter(n, y);
        const int tau = n.tail;
        n.tail = 0;
        if (index.contains(n)) continue;
        if (static_cast<int>(rep.vertices.size()) >= max_vertices) {
          truncated = true;
          continue;
        }
        index[n] = static_cast<int>(rep.vertices.size());
        local.push_back(vgroup(end(n)).conj(tau, lt.pass[static_cast<std::size_t>(c)]));
        rep.vertices.push_back(std::move(n));
        rep.distance.push_back(rep.distance[head] + 1);
        ++rep.edge_count;
      }
    }
    fixed_degree.push_back(deg);
    rep.radius = std::max(rep.radius, rep.distance[head]);
    if (rep.distance[head] >= max_radius && deg > (head == 0 ? 0 : 1)) truncated = true;
  }

  if (!truncated) {
    rep.kind = FixedKind::Finite;
    rep.ends = 0;
    rep.xi = -1;
    return rep;
  }

  // Elements z = U g S^-1 carry s to another fixed vertex u of the same type.
  std::vector<int> by_distance(rep.vertices.size());
  for (std::size_t i = 0; i < by_distance.size(); ++i) by_distance[i] = static_cast<int>(i);
  std::stable_sort(by_distance.begin(), by_distance.end(),
                   [&](int a, int b) { return rep.distance[static_cast<std::size_t>(a)] < rep.distance[static_cast<std::size_t>(b)]; });
  const NormalForm s_inv = inverse(s);
  std::vector<NormalForm> hyperbolic;
  const bool branches = std::any_of(fixed_degree.begin(), fixed_degree.end(), [](int d) { return d >= 3; });
  for (int i : by_distance) {
    const NormalForm& u = rep.vertices[static_cast<std::size_t>(i)];
    const int du = rep.distance[static_cast<std::size_t>(i)];
    if (du == 0 || end(u) != end(s)) continue;
    for (int g = 0; g < gs.order(); ++g) {
      NormalForm ug = u;
      ug.tail = g;
      const NormalForm z = multiply(ug, s_inv);
      if (elliptic(z) || !normalizes(z, w, rep.order)) continue;
      if (hyperbolic.size() < 24) hyperbolic.push_back(z);
      if (distance(s, act(z, act(z, s))) != 2 * du) continue;
      bool thin = true;
      for (const auto& p : geodesic(s, u)) {
        const auto it = index.find(p);
        if (it == index.end() || fixed_degree[static_cast<std::size_t>(it->second)] != 2) thin = false;
      }
      if (thin) {
        rep.kind = FixedKind::Line;
        rep.translation = z;
        rep.translation_length = du;
        rep.ends = 2;
        rep.xi = 1;
        return rep;
      }
    }
    if (branches && hyperbolic.size() >= 24) break;
  }

  if (branches) {
    for (std::size_t a = 0; a < hyperbolic.size(); ++a)
      for (std::size_t b = a + 1; b < hyperbolic.size(); ++b) {
        const NormalForm& z1 = hyperbolic[a];
        const NormalForm& z2 = hyperbolic[b];
        const NormalForm comm = multiply(multiply(z1, z2), multiply(inverse(z1), inverse(z2)));
        if (elliptic(comm)) continue;
        rep.kind = FixedKind::Branching;
        rep.independent = std::make_pair(z1, z2);
        rep.ends = -1;
        rep.xi = std::nullopt;
        return rep;
      }
  }
  rep.kind = FixedKind::Unresolved;
  rep.note = "fixed subtree reaches radius " + std::to_string(max_radius) + " without a line or branching certificate";
  return rep;
}

NormalizerClass BassSerre::normalizer_class(const FixedSubtreeReport& r) const {
  switch (r.kind) {
    case FixedKind::Finite: return NormalizerClass::FiniteWithWitness;
    case FixedKind::Line: return NormalizerClass::TwoEnded;
    case FixedKind::Branching: return NormalizerClass::ContainsFreeGroup;
    case FixedKind::Unresolved: return NormalizerClass::Unresolved;
  }
  return NormalizerClass::Unresolved;
}

std::vector<std::pair<int, int>> BassSerre::vertex_class_reps() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < graph_->vertex_count(); ++v)
    for (int g : conjugacy_class_reps(vgroup(v)))
      if (g != 0) out.emplace_back(v, g);
  return out;
}

}  // namespace gog
