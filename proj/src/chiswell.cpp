#include "gog/chiswell.hpp"

#include <map>
#include <numeric>

namespace gog {

const char* to_string(ChiswellVerdict v) {
  switch (v) {
    case ChiswellVerdict::Consistent: return "Consistent";
    case ChiswellVerdict::Obstructed: return "Obstructed";
    case ChiswellVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

bool counted(const ChiswellOrbit& o) { return o.stabilizer_order > 1 && o.twist == 1; }

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

constexpr int kWindowCap = 20000;

class WindowBuilder {
 public:
  WindowBuilder(const BassSerre& bs, const NormalForm& w, int q, int eps, const NormalForm& s)
      : bs_(bs), w_(w), q_(q), eps_(eps), s_(s) {
    for (int p : prime_divisors(q)) powers_.push_back(bs.power(w, q / p));
  }

  ChiswellWindow build(int radius) {
    ChiswellWindow win;
    win.radius = radius;
    std::vector<NormalForm> verts{s_};
    std::map<NormalForm, int> index{{s_, 0}};
    std::vector<int> dist{0};
    for (std::size_t head = 0; head < verts.size(); ++head) {
      if (dist[head] >= radius) continue;
      const NormalForm x = verts[head];
      for (auto& n : bs_.neighbours(x)) {
        if (index.contains(n) || fixed_mask(n) == 0) continue;
        if (static_cast<int>(verts.size()) >= kWindowCap)
          throw Error(ErrorKind::UnresolvedSubtree, "non-free part of the tree exceeds the window cap");
        index[n] = static_cast<int>(verts.size());
        verts.push_back(n);
        dist.push_back(dist[head] + 1);
      }
    }
    // Non-free edges meeting the window, keyed by their farther endpoint.
    std::map<NormalForm, bool> edges;  // key -> boundary
    for (const auto& x : verts) {
      const unsigned mx = fixed_mask(x);
      for (auto& n : bs_.neighbours(x)) {
        if ((mx & fixed_mask(n)) == 0) continue;
        const NormalForm key = n.length() > x.length() ? n : x;
        edges.emplace(key, !index.contains(n));
      }
    }

    std::map<NormalForm, int> seen;
    for (const auto& x : verts) {
      if (seen.contains(x)) continue;
      ChiswellOrbit o;
      o.representative = x;
      std::vector<NormalForm> members{x};
      for (NormalForm y = bs_.act(w_, x); y != x; y = bs_.act(w_, y)) members.push_back(y);
      for (const auto& y : members) seen[y] = 1;
      fill(o, static_cast<int>(members.size()));
      win.vertex_orbits.push_back(o);
      vertex_members_.push_back(std::move(members));
    }
    seen.clear();
    for (const auto& [key, boundary] : edges) {
      if (seen.contains(key)) continue;
      ChiswellOrbit o;
      o.representative = key;
      o.boundary = boundary;
      int m = 0;
      NormalForm y = key;
      do {
        seen[y] = 1;
        ++m;
        y = act_edge(y);
      } while (y != key);
      fill(o, m);
      win.edge_orbits.push_back(o);
    }

    std::vector<CyclicOrbit> vo, eo;
    std::vector<std::size_t> vcols, erows;
    for (std::size_t i = 0; i < win.vertex_orbits.size(); ++i) {
      vo.push_back({win.vertex_orbits[i].stabilizer_order, win.vertex_orbits[i].twist});
      if (counted(win.vertex_orbits[i])) vcols.push_back(i);
    }
    for (std::size_t i = 0; i < win.edge_orbits.size(); ++i) {
      eo.push_back({win.edge_orbits[i].stabilizer_order, win.edge_orbits[i].twist});
      if (counted(win.edge_orbits[i])) erows.push_back(i);
    }
    win.vertex_h1 = cyclic_module_homology(q_, vo, 1);
    win.edge_h1 = cyclic_module_homology(q_, eo, 1);

    const auto nr = static_cast<Eigen::Index>(erows.size());
    const auto nc = static_cast<Eigen::Index>(vcols.size());
    win.delta = int_matrix(nr, nc);
    IntMatrix presentation = int_matrix(nr, nc + nr);
    for (Eigen::Index r = 0; r < nr; ++r) {
      const NormalForm& edge = win.edge_orbits[erows[static_cast<std::size_t>(r)]].representative;
      const NormalForm par = bs_.parent(edge);
      const int origin_sign = bs_.child_is_origin(edge) ? 1 : -1;
      for (Eigen::Index c = 0; c < nc; ++c) {
        const auto& members = vertex_members_[vcols[static_cast<std::size_t>(c)]];
        long long entry = 0;
        int sign = 1;
        for (const auto& v : members) {
          // Delta sends a vertex to its edges with +1 at the origin and -1 at the target.
          if (v == edge) entry += sign * origin_sign;
          else if (v == par) entry -= sign * origin_sign;
          sign *= eps_;
        }
        win.delta(r, c) = Integer(entry);
        presentation(r, c) = Integer(entry);
      }
      presentation(r, nc + r) = Integer(win.edge_orbits[erows[static_cast<std::size_t>(r)]].stabilizer_order);
    }
    win.cokernel = nr == 0 ? AbelianGroupInvariants{} : cokernel_invariants(presentation);
    Integer a(1), b(1);
    for (auto i : vcols) a *= Integer(win.vertex_orbits[i].stabilizer_order);
    for (auto i : erows) b *= Integer(win.edge_orbits[i].stabilizer_order);
    win.injective = a * *win.cokernel.order() == b;
    vertex_members_.clear();
    return win;
  }

 private:
  unsigned fixed_mask(const NormalForm& v) {
    const auto it = masks_.find(v);
    if (it != masks_.end()) return it->second;
    unsigned m = 0;
    for (std::size_t i = 0; i < powers_.size(); ++i)
      if (bs_.fixes(powers_[i], v)) m |= 1U << i;
    masks_[v] = m;
    return m;
  }

  NormalForm act_edge(const NormalForm& key) const {
    const NormalForm a = bs_.act(w_, key);
    const NormalForm b = bs_.act(w_, bs_.parent(key));
    return a.length() > b.length() ? a : b;
  }

  void fill(ChiswellOrbit& o, int m) const {
    o.size = m;
    o.stabilizer_order = q_ / m;
    o.twist = (eps_ == -1 && m % 2 == 1) ? -1 : 1;
  }

  const BassSerre& bs_;
  NormalForm w_;
  int q_;
  int eps_;
  NormalForm s_;
  std::vector<NormalForm> powers_;
  std::map<NormalForm, unsigned> masks_;
  std::vector<std::vector<NormalForm>> vertex_members_;
};

}  // namespace

ChiswellH1Data chiswell_h1(const BassSerre& bs, const OrientationCharacter& omega, const NormalForm& w, int max_radius,
                           bool allow_reversing) {
  const auto ell = bs.elliptic(w);
  if (!ell) throw Error(ErrorKind::NotFiniteOrder, bs.str(w) + " has infinite order");
  if (ell->order == 1) throw Error(ErrorKind::TrivialElement, "the identity has no Chiswell obstruction");
  ChiswellH1Data data;
  data.order = ell->order;
  data.omega = bs.omega(omega, w);
  if (data.omega == -1 && !allow_reversing)
    throw Error(ErrorKind::BadOrientation, "omega(w) = -1; enable the orientation-reversing mode");
  data.targets = {data.order};
  if (data.omega == -1 && data.order % 2 == 0) data.targets.push_back(data.order / 2);

  const NormalForm s = bs.vertex_of(ell->conjugator);
  int extent = 0;
  int period = 1;
  bool lines = false;
  for (int p : prime_divisors(data.order)) {
    const FixedSubtreeReport r = bs.fixed_subtree(bs.power(w, data.order / p), max_radius);
    switch (r.kind) {
      case FixedKind::Unresolved:
        throw Error(ErrorKind::UnresolvedSubtree, "fixed subtree of w^" + std::to_string(data.order / p) + ": " + r.note);
      case FixedKind::Branching: data.branching = true; break;
      case FixedKind::Line:
        lines = true;
        period = std::lcm(period, r.translation_length);
        break;
      case FixedKind::Finite:
        for (const auto& v : r.vertices) extent = std::max(extent, bs.distance(s, v));
        break;
    }
  }
  WindowBuilder builder(bs, w, data.order, data.omega, s);
  if (data.branching) {
    for (int k = 1; k <= 3; ++k) data.windows.push_back(builder.build(std::max(extent, k)));
  } else if (lines) {
    for (int k = 1; k <= 3; ++k) data.windows.push_back(builder.build(std::max(extent, k * period)));
  } else {
    data.exact_computation = true;
    data.windows.push_back(builder.build(extent));
  }
  return data;
}

ChiswellResult hchis_obstruction(const BassSerre& bs, const OrientationCharacter& omega, const NormalForm& w,
                                 int max_radius, bool allow_reversing) {
  ChiswellResult res;
  res.data = chiswell_h1(bs, omega, w, max_radius, allow_reversing);
  const auto& d = res.data;
  for (const auto& win : d.windows)
    if (!win.injective) {
      res.verdict = ChiswellVerdict::Obstructed;
      res.witness = "H_1 map " + win.vertex_h1.str() + " -> " + win.edge_h1.str() + " is not injective (radius " +
                    std::to_string(win.radius) + ")";
      return res;
    }
  if (d.branching) {
    res.verdict = ChiswellVerdict::Inconclusive;
    res.witness = "fixed subtree branches; no kernel found in windows";
    return res;
  }
  const AbelianGroupInvariants& coker = d.windows.front().cokernel;
  for (const auto& win : d.windows)
    if (!(win.cokernel == coker)) {
      res.verdict = ChiswellVerdict::Inconclusive;
      res.witness = "cokernel changes with the window: " + coker.str() + " vs " + win.cokernel.str();
      return res;
    }
  bool matches = false;
  for (int t : d.targets) matches = matches || coker.is_cyclic_of_order(Integer(t));
  if (matches) {
    res.verdict = ChiswellVerdict::Consistent;
    res.witness = "cokernel " + coker.str();
  } else {
    res.verdict = ChiswellVerdict::Obstructed;
    res.witness = "cokernel " + coker.str() + " is not Z/" + std::to_string(d.order);
  }
  return res;
}

}  // namespace gog
