#include "gog/finite_group.hpp"
#include "gog/group_catalog.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace gog {

namespace {

constexpr int kMaxSubgroupOrder = 64;

void require_small(const FiniteGroup& g, const char* what) {
  if (g.order() > kMaxSubgroupOrder)
    throw Error(ErrorKind::Unsupported, std::string(what) + " supports groups of order <= 64");
}

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::map<std::string, int> generators,
                                    std::string name) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw Error(ErrorKind::BadTable, "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw Error(ErrorKind::BadTable, "row " + std::to_string(i) + " has length " + std::to_string(table[i].size()));
    for (int x : table[i])
      if (x < 0 || x >= n) throw Error(ErrorKind::BadTable, "entry " + std::to_string(x) + " out of range");
  }
  for (int i = 0; i < n; ++i) {
    if (table[0][i] != i) throw Error(ErrorKind::NoIdentity, "0*" + std::to_string(i) + " != " + std::to_string(i));
    if (table[i][0] != i) throw Error(ErrorKind::NoIdentity, std::to_string(i) + "*0 != " + std::to_string(i));
  }
  FiniteGroup g;
  g.inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == 0 && table[b][a] == 0) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] < 0) throw Error(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorKind::NotAssociative, "(ab)c != a(bc) at " + triple(a, b, c));
  g.table_ = std::move(table);
  g.orders_.assign(static_cast<std::size_t>(n), 1);
  for (int a = 1; a < n; ++a) {
    int x = a;
    int k = 1;
    while (x != 0) {
      x = g.mul(x, a);
      ++k;
    }
    g.orders_[a] = k;
  }
  g.set_generator_names(std::move(generators));
  g.name_ = std::move(name);
  return g;
}

void FiniteGroup::set_generator_names(std::map<std::string, int> names) {
  for (const auto& [label, idx] : names)
    if (idx < 0 || idx >= order()) throw Error(ErrorKind::BadInput, "generator " + label + " out of range");
  generators_ = std::move(names);
}

int FiniteGroup::power(int a, long long k) const {
  const int o = element_order(a);
  long long e = k % o;
  if (e < 0) e += o;
  int x = 0;
  for (long long i = 0; i < e; ++i) x = mul(x, a);
  return x;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<int> FiniteGroup::generating_set() const {
  if (!generators_.empty()) {
    std::vector<int> gens;
    for (const auto& [label, idx] : generators_)
      if (idx != 0 && std::find(gens.begin(), gens.end(), idx) == gens.end()) gens.push_back(idx);
    std::vector<bool> seen(static_cast<std::size_t>(order()), false);
    seen[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int s : gens) {
        const int y = mul(x, s);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return gens;
  }
  // Greedy: repeatedly add the highest-order element outside the current span.
  std::vector<int> gens;
  std::vector<bool> span(static_cast<std::size_t>(order()), false);
  span[0] = true;
  auto close = [&] {
    std::deque<int> queue;
    for (int x = 0; x < order(); ++x)
      if (span[x]) queue.push_back(x);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int s : gens) {
        const int y = mul(x, s);
        if (!span[y]) {
          span[y] = true;
          queue.push_back(y);
        }
      }
    }
  };
  for (;;) {
    int best = -1;
    for (int x = 1; x < order(); ++x)
      if (!span[x] && (best < 0 || element_order(x) > element_order(best))) best = x;
    if (best < 0) break;
    gens.push_back(best);
    close();
  }
  return gens;
}

std::string FiniteGroup::element_name(int x) const {
  if (x == 0) return "e";
  for (const auto& [label, idx] : generators_)
    if (idx == x) return label;
  // Shortest word in the named generators, found breadth-first; runs become powers.
  std::vector<int> prev(table_.size(), -1), via(table_.size(), -1);
  std::vector<int> queue{0};
  prev[0] = 0;
  std::vector<std::pair<std::string, int>> gens(generators_.begin(), generators_.end());
  for (std::size_t head = 0; head < queue.size() && prev[static_cast<std::size_t>(x)] < 0; ++head)
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = mul(queue[head], gens[i].second);
      if (prev[static_cast<std::size_t>(y)] >= 0) continue;
      prev[static_cast<std::size_t>(y)] = queue[head];
      via[static_cast<std::size_t>(y)] = static_cast<int>(i);
      queue.push_back(y);
    }
  if (prev[static_cast<std::size_t>(x)] < 0) return "#" + std::to_string(x);
  std::vector<int> letters;
  for (int y = x; y != 0; y = prev[static_cast<std::size_t>(y)]) letters.push_back(via[static_cast<std::size_t>(y)]);
  std::reverse(letters.begin(), letters.end());
  bool short_labels = true;
  for (const auto& g : gens) short_labels = short_labels && g.first.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!out.empty() && !short_labels) out += "*";
    out += gens[static_cast<std::size_t>(letters[i])].first;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, std::span<const int> images) {
  if (static_cast<int>(images.size()) != source.order()) return false;
  for (int x : images)
    if (x < 0 || x >= target.order()) return false;
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b)
      if (images[source.mul(a, b)] != target.mul(images[a], images[b])) return false;
  return true;
}

bool is_injective(std::span<const int> images) {
  std::set<int> seen(images.begin(), images.end());
  return seen.size() == images.size();
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  GroupHom out;
  out.images.reserve(inner.images.size());
  for (int x : inner.images) out.images.push_back(outer(x));
  return out;
}

GroupHom inverse(const GroupHom& bijection) {
  GroupHom out;
  out.images.assign(bijection.images.size(), -1);
  for (std::size_t i = 0; i < bijection.images.size(); ++i)
    out.images[static_cast<std::size_t>(bijection.images[i])] = static_cast<int>(i);
  return out;
}

// ---- subgroups -------------------------------------------------------------

ElementSet whole(const FiniteGroup& g) {
  require_small(g, "element sets");
  return g.order() == 64 ? ~ElementSet{0} : ((ElementSet{1} << g.order()) - 1);
}

std::vector<int> elements_of(ElementSet s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1U) out.push_back(i);
  return out;
}

ElementSet closure(const FiniteGroup& g, ElementSet seed) {
  require_small(g, "closure");
  ElementSet set = seed | 1U;
  std::vector<int> gens = elements_of(seed);
  std::vector<int> queue = elements_of(set);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (int s : gens) {
      const int y = g.mul(x, s);
      if (!contains(set, y)) {
        set |= ElementSet{1} << y;
        queue.push_back(y);
      }
    }
  }
  return set;
}

ElementSet generated(const FiniteGroup& g, std::span<const int> elements) {
  ElementSet seed = 0;
  for (int x : elements) seed |= ElementSet{1} << x;
  return closure(g, seed);
}

std::vector<ElementSet> all_subgroups(const FiniteGroup& g) {
  require_small(g, "subgroup enumeration");
  std::vector<ElementSet> cyclic;
  std::set<ElementSet> found;
  for (int x = 0; x < g.order(); ++x) {
    const int one[] = {x};
    const ElementSet c = generated(g, one);
    if (found.insert(c).second) cyclic.push_back(c);
  }
  std::vector<ElementSet> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (ElementSet h : frontier) {
      for (ElementSet c : cyclic) {
        if ((c & ~h) == 0) continue;
        const ElementSet j = closure(g, h | c);
        if (found.insert(j).second) next.push_back(j);
      }
    }
    frontier = std::move(next);
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    return set_size(a) != set_size(b) ? set_size(a) < set_size(b) : a < b;
  });
  return out;
}

FiniteGroup subgroup_group(const FiniteGroup& g, ElementSet h, std::vector<int>* embedding) {
  const std::vector<int> elems = elements_of(h);  // 0 first
  std::map<int, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const auto it = index.find(g.mul(elems[i], elems[j]));
      if (it == index.end()) throw Error(ErrorKind::BadInput, "element set is not a subgroup");
      table[i][j] = it->second;
    }
  if (embedding) *embedding = elems;
  return FiniteGroup::from_table(std::move(table));
}

ElementSet normalizer(const FiniteGroup& g, ElementSet h) {
  ElementSet out = 0;
  const auto hs = elements_of(h);
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int y : hs)
      if (!contains(h, g.conj(x, y))) {
        ok = false;
        break;
      }
    if (ok) out |= ElementSet{1} << x;
  }
  return out;
}

ElementSet centralizer(const FiniteGroup& g, ElementSet h) {
  ElementSet out = 0;
  const auto hs = elements_of(h);
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int y : hs)
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) out |= ElementSet{1} << x;
  }
  return out;
}

bool is_normal(const FiniteGroup& g, ElementSet h) { return normalizer(g, h) == whole(g); }

std::vector<int> conjugacy_class_reps(const FiniteGroup& g) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int y = 0; y < g.order(); ++y) seen[g.conj(y, x)] = true;
  }
  return reps;
}

namespace {

// Extends generator images to a map on all of `source`; nullopt when inconsistent.
std::optional<std::vector<int>> extend(const FiniteGroup& source, const FiniteGroup& target,
                                       const std::vector<int>& gens, const std::vector<int>& images) {
  std::vector<int> map(static_cast<std::size_t>(source.order()), -1);
  map[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = source.mul(x, gens[i]);
      const int fy = target.mul(map[x], images[i]);
      if (map[y] < 0) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != source.order()) return std::nullopt;
  if (!is_homomorphism(source, target, map)) return std::nullopt;
  return map;
}

// Calls visit(map) for every homomorphism source -> target whose generator images
// satisfy `allowed`; stops early when visit returns false.
template <typename Allowed, typename Visit>
void for_each_hom(const FiniteGroup& source, const FiniteGroup& target, Allowed allowed, Visit visit) {
  const std::vector<int> gens = source.generating_set();
  std::vector<int> images(gens.size(), 0);
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == gens.size()) {
      if (auto map = extend(source, target, gens, images))
        if (!visit(*map)) stop = true;
      return;
    }
    for (int y = 0; y < target.order() && !stop; ++y) {
      if (!allowed(gens[i], y)) continue;
      images[i] = y;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  std::optional<std::vector<int>> found;
  for_each_hom(
      a, b, [&](int x, int y) { return a.element_order(x) == b.element_order(y); },
      [&](const std::vector<int>& map) {
        if (!is_injective(map)) return true;
        found = map;
        return false;
      });
  return found;
}

std::vector<GroupHom> automorphisms(const FiniteGroup& g) {
  std::vector<GroupHom> out;
  for_each_hom(
      g, g, [&](int x, int y) { return g.element_order(x) == g.element_order(y); },
      [&](const std::vector<int>& map) {
        if (is_injective(map)) out.push_back(GroupHom{map});
        return true;
      });
  std::sort(out.begin(), out.end(), [](const GroupHom& a, const GroupHom& b) { return a.images < b.images; });
  return out;
}

std::vector<GroupHom> inner_automorphisms(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<GroupHom> out;
  for (int c = 0; c < g.order(); ++c) {
    std::vector<int> map(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) map[x] = g.conj(c, x);
    if (seen.insert(map).second) out.push_back(GroupHom{map});
  }
  return out;
}

std::vector<GroupHom> injective_homs(const FiniteGroup& source, const FiniteGroup& target) {
  std::vector<GroupHom> out;
  for_each_hom(
      source, target, [&](int x, int y) { return source.element_order(x) == target.element_order(y); },
      [&](const std::vector<int>& map) {
        if (is_injective(map)) out.push_back(GroupHom{map});
        return true;
      });
  std::sort(out.begin(), out.end(), [](const GroupHom& a, const GroupHom& b) { return a.images < b.images; });
  return out;
}

std::vector<std::vector<int>> sign_characters(const FiniteGroup& g) {
  const FiniteGroup z2 = cyclic_group(2);
  std::vector<std::vector<int>> out;
  for_each_hom(
      g, z2, [](int, int) { return true; },
      [&](const std::vector<int>& map) {
        std::vector<int> signs;
        signs.reserve(map.size());
        for (int x : map) signs.push_back(x == 0 ? 1 : -1);
        out.push_back(std::move(signs));
        return true;
      });
  std::sort(out.begin(), out.end(), std::greater<>());  // trivial character first
  return out;
}

// ---- structure -------------------------------------------------------------

const char* to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::Trivial: return "Trivial";
    case StructureKind::Cyclic: return "Cyclic";
    case StructureKind::Dihedral: return "Dihedral";
    case StructureKind::Quaternionic: return "Quaternionic";
    case StructureKind::KleinFour: return "KleinFour";
    case StructureKind::MetacyclicOther: return "MetacyclicOther";
    case StructureKind::Other: return "Other";
  }
  return "Other";
}

std::string StructureTag::str() const {
  std::ostringstream os;
  os << to_string(kind);
  if (kind == StructureKind::Cyclic || kind == StructureKind::Dihedral || kind == StructureKind::Quaternionic)
    os << "(" << parameter << ")";
  return os.str();
}

namespace {

std::map<int, int> prime_factors(int n) {
  std::map<int, int> out;
  for (int p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

bool has_element_of_order(const FiniteGroup& g, int k) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) return true;
  return false;
}

int involution_count(const FiniteGroup& g) {
  int c = 0;
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2) ++c;
  return c;
}

std::vector<SylowSummary> sylow_summaries(const FiniteGroup& g) {
  std::vector<SylowSummary> out;
  if (g.order() == 1) return out;
  const auto subgroups = all_subgroups(g);
  for (const auto& [p, e] : prime_factors(g.order())) {
    int pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    SylowSummary s;
    s.prime = p;
    s.order = pe;
    for (ElementSet h : subgroups)
      if (set_size(h) == pe) {
        s.subgroup = h;
        break;
      }
    const FiniteGroup sub = subgroup_group(g, s.subgroup);
    if (has_element_of_order(sub, pe))
      s.kind = SylowKind::Cyclic;
    else if (p == 2 && pe >= 8 && involution_count(sub) == 1)
      s.kind = SylowKind::Quaternionic;
    else
      s.kind = SylowKind::Other;
    out.push_back(s);
  }
  return out;
}

}  // namespace

bool is_dihedral(const FiniteGroup& g) {
  const int n = g.order();
  if (n == 4) return !has_element_of_order(g, 4);
  if (n < 6 || n % 2 != 0) return false;
  return find_isomorphism(dihedral_group(n), g).has_value();
}

bool is_metacyclic(const FiniteGroup& g) {
  const ElementSet all = whole(g);
  for (int c = 0; c < g.order(); ++c) {
    const int one[] = {c};
    const ElementSet n = generated(g, one);
    if (!is_normal(g, n)) continue;
    for (int x = 0; x < g.order(); ++x)
      if (closure(g, n | (ElementSet{1} << x)) == all) return true;
  }
  return false;
}

StructureTag classify_structure(const FiniteGroup& g) {
  StructureTag tag;
  const int n = g.order();
  tag.sylow = sylow_summaries(g);
  if (n == 1) {
    tag.kind = StructureKind::Trivial;
    tag.parameter = 1;
    tag.witness = {0};
    return tag;
  }
  if (auto iso = find_isomorphism(cyclic_group(n), g)) {
    tag.kind = StructureKind::Cyclic;
    tag.parameter = n;
    tag.witness = *iso;
    return tag;
  }
  if (n == 4) {
    tag.kind = StructureKind::KleinFour;
    tag.parameter = 4;
    tag.witness = *find_isomorphism(klein_four_group(), g);
    return tag;
  }
  if (n % 2 == 0 && n >= 6)
    if (auto iso = find_isomorphism(dihedral_group(n), g)) {
      tag.kind = StructureKind::Dihedral;
      tag.parameter = n;
      tag.witness = *iso;
      return tag;
    }
  if (is_power_of_two(n) && n >= 8)
    if (auto iso = find_isomorphism(quaternion_group(n), g)) {
      tag.kind = StructureKind::Quaternionic;
      tag.parameter = n;
      tag.witness = *iso;
      return tag;
    }
  tag.kind = is_metacyclic(g) ? StructureKind::MetacyclicOther : StructureKind::Other;
  return tag;
}

std::optional<ElementSet> dihedral_subgroup_gt2(const FiniteGroup& g) {
  for (ElementSet h : all_subgroups(g)) {
    const int k = set_size(h);
    if (k < 6 || k % 2 != 0) continue;
    if (is_dihedral(subgroup_group(g, h))) return h;
  }
  return std::nullopt;
}

std::optional<ElementSet> elementary_abelian_rank2_subgroup(const FiniteGroup& g) {
  for (ElementSet h : all_subgroups(g)) {
    const int k = set_size(h);
    const auto f = prime_factors(k);
    if (f.size() != 1 || f.begin()->second != 2) continue;
    const int p = f.begin()->first;
    bool exponent_p = true;
    bool abelian = true;
    for (int x : elements_of(h)) {
      if (g.element_order(x) > p) exponent_p = false;
      for (int y : elements_of(h))
        if (g.mul(x, y) != g.mul(y, x)) abelian = false;
    }
    if (exponent_p && abelian) return h;
  }
  return std::nullopt;
}

bool contains_klein_four(const FiniteGroup& g) {
  if (g.order() % 4 != 0) return false;
  for (int x = 1; x < g.order(); ++x) {
    if (g.element_order(x) != 2) continue;
    for (int y = x + 1; y < g.order(); ++y)
      if (g.element_order(y) == 2 && g.mul(x, y) == g.mul(y, x)) return true;
  }
  return false;
}

PeriodicityReport periodicity(const FiniteGroup& g) {
  PeriodicityReport report;
  report.sylow = sylow_summaries(g);
  report.periodic = std::all_of(report.sylow.begin(), report.sylow.end(),
                                [](const SylowSummary& s) { return s.kind != SylowKind::Other; });
  if (!report.periodic) return report;
  int period = 2;
  for (const auto& s : report.sylow) {
    int pp = 2;
    if (s.prime == 2) {
      pp = s.kind == SylowKind::Quaternionic ? 4 : 2;
    } else {
      const int n = set_size(normalizer(g, s.subgroup));
      const int c = set_size(centralizer(g, s.subgroup));
      pp = 2 * (n / c);
    }
    report.prime_period[s.prime] = pp;
    period = std::lcm(period, pp);
  }
  report.period = period;
  return report;
}

// ---- homology of cyclic groups ---------------------------------------------

AbelianGroupInvariants cyclic_module_homology(int q, std::span<const CyclicOrbit> orbits, int degree) {
  if (q < 1) throw Error(ErrorKind::BadStabilizer, "group order must be positive");
  if (degree < 0) throw Error(ErrorKind::BadInput, "negative degree");
  AbelianGroupInvariants total;
  for (const auto& orbit : orbits) {
    const int d = orbit.stabilizer_order;
    if (d < 1 || q % d != 0)
      throw Error(ErrorKind::BadStabilizer, "stabilizer order " + std::to_string(d) + " does not divide " +
                                                std::to_string(q));
    if (orbit.twist != 1 && orbit.twist != -1) throw Error(ErrorKind::BadStabilizer, "twist must be +1 or -1");
    if (orbit.twist == -1 && d % 2 != 0)
      throw Error(ErrorKind::BadStabilizer, "sign character on a stabilizer of odd order " + std::to_string(d));
    // Shapiro: H_s(C; Ind_S^C chi) = H_s(S; chi). Resolve Z/d periodically:
    // d_odd = (chi - 1), d_even = sum_{j<d} chi^j, on rank-one modules.
    const long long chi = orbit.twist;
    long long norm = 0;
    for (int j = 0, sgn = 1; j < d; ++j, sgn *= static_cast<int>(chi)) norm += sgn;
    std::vector<IntMatrix> boundaries;
    for (int i = 1; i <= degree + 1; ++i)
      boundaries.push_back(int_matrix({{i % 2 == 1 ? chi - 1 : norm}}));
    total = direct_sum(total, complex_homology(boundaries)[static_cast<std::size_t>(degree)]);
  }
  return total;
}

int top_homology_automorphism(const FiniteGroup& f, const GroupHom& theta, int k) {
  const int m = f.order();
  if (k < 1) throw Error(ErrorKind::BadInput, "half-dimension k must be positive");
  if (static_cast<int>(theta.images.size()) != m || !is_homomorphism(f, f, theta.images) || !theta.injective())
    throw Error(ErrorKind::BadInput, "theta is not an automorphism");
  if (m == 1) return 0;
  int generator = -1;
  for (const auto& [label, idx] : f.generator_names())
    if (f.element_order(idx) == m) {
      generator = idx;
      break;
    }
  for (int x = 1; x < m && generator < 0; ++x)
    if (f.element_order(x) == m) generator = x;
  if (generator < 0) throw Error(ErrorKind::Unsupported, "induced map on top homology needs a cyclic group");
  int j = -1;
  for (int e = 0, x = 0; e < m; ++e, x = f.mul(x, generator))
    if (x == theta(generator)) {
      j = e;
      break;
    }
  long long value = 1 % m;
  for (int i = 0; i < k; ++i) value = (value * j) % m;
  return static_cast<int>(value);
}

}  // namespace gog
