#include "gog/checks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gog {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "Pass";
    case CheckStatus::Fail: return "Fail";
    case CheckStatus::Skipped: return "Skipped";
    case CheckStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Obstructed: return "Obstructed";
    case Verdict::Candidate: return "Candidate";
    case Verdict::Unresolved: return "Unresolved";
  }
  return "?";
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"};
  return ids;
}

const std::map<std::string, std::string>& check_names() {
  static const std::map<std::string, std::string> names{
      {"a", "edge orientability"},
      {"b", "torsion omega-parity"},
      {"c", "xi dichotomy"},
      {"d", "normalizer two-endedness"},
      {"e", "Chiswell exactness"},
      {"f", "prime-power conjugation into edges"},
      {"g", "odd-order metacyclicity"},
      {"h", "periodic cohomology"},
      {"i", "no-dihedral conclusion"},
      {"j", "one-ended-vertex torsion orientability"},
      {"k", "Klein-four case"},
      {"l", "nilpotent edge types"},
  };
  return names;
}

const CheckResult& CheckReport::check(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return c;
  throw Error(ErrorKind::BadInput, "no check " + id);
}

std::vector<std::string> CheckReport::failing() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) out.push_back(c.id);
  return out;
}

Verdict aggregate(const std::vector<CheckResult>& checks) {
  bool open = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return Verdict::Obstructed;
    if (c.status == CheckStatus::Inconclusive) open = true;
  }
  return open ? Verdict::Unresolved : Verdict::Candidate;
}

bool is_nilpotent(const FiniteGroup& g) {
  // Nilpotent iff every Sylow subgroup is normal, i.e. unique: the elements of
  // p-power order then number exactly the p-part of |g|.
  int n = g.order();
  for (int p = 2; n > 1; ++p) {
    if (n % p != 0) continue;
    int part = 1;
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
    int count = 0;
    for (int x = 0; x < g.order(); ++x) {
      int o = g.element_order(x);
      while (o % p == 0) o /= p;
      count += o == 1;
    }
    if (count != part) return false;
  }
  return true;
}

namespace {

bool is_prime(int m) {
  if (m < 2) return false;
  for (int p = 2; p * p <= m; ++p)
    if (m % p == 0) return false;
  return true;
}

bool is_prime_power(int m) {
  if (m < 2) return false;
  int p = 2;
  while (m % p != 0) ++p;
  while (m % p == 0) m /= p;
  return m == 1;
}

struct ElementData {
  int vertex = 0;
  int element = 0;
  int order = 1;
  int omega = 1;
  NormalForm word;
  std::optional<FixedSubtreeReport> fixed;  // nullopt when the search threw
  std::string label;
};

class Battery {
 public:
  Battery(const GraphOfGroups& g, const OrientationCharacter& omega, int n, int radius)
      : g_(g), omega_(omega), n_(n), radius_(radius) {
    if (g.all_finite()) bs_.emplace(g);
  }

  CheckResult run(const std::string& id) {
    CheckResult r{id, check_names().at(id), CheckStatus::Pass, ""};
    if (id == "a") a(r);
    else if (id == "b") b(r);
    else if (id == "c") c(r);
    else if (id == "d") d(r);
    else if (id == "e") e(r);
    else if (id == "f") f(r);
    else if (id == "g") gg(r);
    else if (id == "h") h(r);
    else if (id == "i") i(r);
    else if (id == "j") j(r);
    else if (id == "k") k(r);
    else if (id == "l") l(r);
    return r;
  }

 private:
  static void fail(CheckResult& r, const std::string& why) {
    if (r.status != CheckStatus::Fail) r.witness.clear();
    r.status = CheckStatus::Fail;
    if (!r.witness.empty()) r.witness += "; ";
    r.witness += why;
  }
  static void open(CheckResult& r, const std::string& why) {
    if (r.status == CheckStatus::Fail) return;
    r.status = CheckStatus::Inconclusive;
    if (!r.witness.empty()) r.witness += "; ";
    r.witness += why;
  }
  static void skip(CheckResult& r, const std::string& why) {
    r.status = CheckStatus::Skipped;
    r.witness = why;
  }
  // Class representatives of vertex elements with their fixed subtrees, built on first use.
  const std::vector<ElementData>& elements() {
    if (loaded_) return elements_;
    loaded_ = true;
    for (const auto& [v, x] : bs_->vertex_class_reps()) {
      ElementData d;
      d.vertex = v;
      d.element = x;
      d.order = g_.group(v).element_order(x);
      d.omega = omega_.vertex_signs[v][x];
      d.word = bs_->vertex_element(v, x);
      d.label = g_.vertex(v).id + ":" + g_.group(v).element_name(x);
      try {
        d.fixed = bs_->fixed_subtree(d.word, radius_);
      } catch (const Error&) {
      }
      elements_.push_back(std::move(d));
    }
    return elements_;
  }

  bool need_tree(CheckResult& r) {
    if (bs_) return true;
    skip(r, "opaque vertices present");
    return false;
  }

  void a(CheckResult& r) {
    bool any = false;
    for (int e = 0; e < g_.edge_count(); ++e) {
      const EdgeClass ec = classify_edge(g_, e);
      if (ec.kind == EdgeKind::Proper) continue;
      any = true;
      const FiniteGroup& ge = g_.edge(e).group;
      for (int x = 1; x < ge.order(); ++x) {
        const int w = omega_.on_edge_group(g_, e, x);
        if (w == -1 && ge.element_order(x) % 4 != 0)
          fail(r, "edge " + g_.edge(e).id + " element " + ge.element_name(x) + " has omega -1 and order " +
                      std::to_string(ge.element_order(x)));
      }
    }
    if (!any) skip(r, "no loop isomorphism or MC-tie");
  }

  void b(CheckResult& r) {
    if (!need_tree(r)) return;
    for (const auto& d : elements()) {
      if (!d.fixed || d.fixed->kind == FixedKind::Unresolved) {
        open(r, d.label + ": centralizer undecided");
        continue;
      }
      if (d.fixed->kind == FixedKind::Finite) continue;
      if (d.fixed->kind == FixedKind::Branching) {
        fail(r, d.label + ": centralizer contains a free group of rank 2");
        continue;
      }
      if (d.omega == -1 && d.order % 4 != 0)
        fail(r, d.label + ": infinite centralizer, omega -1, order " + std::to_string(d.order));
    }
  }

  void c(CheckResult& r) {
    if (!need_tree(r)) return;
    for (const auto& d : elements()) {
      if (!is_prime(d.order)) continue;
      if (!d.fixed || d.fixed->kind == FixedKind::Unresolved) {
        open(r, d.label + ": fixed subtree unresolved");
        continue;
      }
      const auto& xi = d.fixed->xi;
      if (!xi || *xi != d.omega)
        fail(r, d.label + ": omega " + std::to_string(d.omega) + " but xi " + (xi ? std::to_string(*xi) : "infinity"));
    }
  }

  void d(CheckResult& r) {
    if (!need_tree(r)) return;
    for (const auto& d : elements()) {
      if (!is_prime(d.order) || d.omega != 1) continue;
      if (!d.fixed || d.fixed->kind == FixedKind::Unresolved) {
        open(r, d.label + ": normalizer unresolved");
        continue;
      }
      const NormalizerClass nc = bs_->normalizer_class(*d.fixed);
      if (nc != NormalizerClass::TwoEnded) fail(r, d.label + ": normalizer " + to_string(nc));
    }
  }

  void e(CheckResult& r) {
    if (!need_tree(r)) return;
    for (const auto& d : elements()) {
      if (d.omega != 1) continue;
      try {
        const ChiswellResult c = hchis_obstruction(*bs_, omega_, d.word, radius_);
        if (c.verdict == ChiswellVerdict::Obstructed) fail(r, d.label + ": " + c.witness);
        else if (c.verdict == ChiswellVerdict::Inconclusive) open(r, d.label + ": " + c.witness);
      } catch (const Error& err) {
        open(r, d.label + ": " + err.what());
      }
    }
  }

  void f(CheckResult& r) {
    if (!need_tree(r)) return;
    for (const auto& d : elements()) {
      if (!is_prime_power(d.order) || d.omega != 1) continue;
      const FiniteGroup& gv = g_.group(d.vertex);
      bool found = false;
      for (int e = 0; e < g_.edge_count() && !found; ++e) {
        const Edge& ed = g_.edge(e);
        for (int end = 0; end < 2 && !found; ++end) {
          if ((end == 0 ? ed.o : ed.t) != d.vertex) continue;
          ElementSet image = 0;
          for (int x = 0; x < ed.group.order(); ++x) image |= ElementSet{1} << (end == 0 ? ed.into_o(x) : ed.into_t(x));
          for (int h = 0; h < gv.order() && !found; ++h) found = contains(image, gv.conj(h, d.element));
        }
      }
      if (!found) fail(r, d.label + " of order " + std::to_string(d.order) + " is not conjugate into an adjacent edge group");
    }
  }

  void gg(CheckResult& r) {
    if (!need_tree(r)) return;
    for (int v = 0; v < g_.vertex_count(); ++v) {
      const FiniteGroup& gv = g_.group(v);
      for (ElementSet s : all_subgroups(gv)) {
        const int size = set_size(s);
        if (size % 2 == 0) continue;
        if (!is_metacyclic(subgroup_group(gv, s)))
          fail(r, "vertex " + g_.vertex(v).id + " has a non-metacyclic subgroup of order " + std::to_string(size));
      }
    }
  }

  void h(CheckResult& r) {
    if (!need_tree(r)) return;
    for (int v = 0; v < g_.vertex_count(); ++v)
      if (contains_klein_four(g_.group(v))) {
        open(r, "vertex " + g_.vertex(v).id + " contains a Klein four-group");
        return;
      }
    const bool two_ended = g_.edge_count() > 0 && virtual_euler(g_) == Rational(0);
    std::ostringstream periods;
    for (int v = 0; v < g_.vertex_count(); ++v) {
      const PeriodicityReport p = periodicity(g_.group(v));
      if (!p.periodic) {
        fail(r, "vertex " + g_.vertex(v).id + " is not periodic");
        continue;
      }
      periods << (v ? ", " : "") << g_.vertex(v).id << " period " << *p.period;
      if (two_ended && n_ % *p.period != 0)
        fail(r, "vertex " + g_.vertex(v).id + " has period " + std::to_string(*p.period) + " not dividing " +
                    std::to_string(n_));
    }
    if (r.status == CheckStatus::Pass) r.witness = periods.str();
  }

  void i(CheckResult& r) {
    if (!need_tree(r)) return;
    if (g_.edge_count() == 0) return skip(r, "finite group");
    for (int v = 0; v < g_.vertex_count(); ++v)
      if (is_dihedral(g_.group(v))) return skip(r, "vertex " + g_.vertex(v).id + " is dihedral");
    const Ends ends = ends_count(g_);
    if (ends != Ends::Two) fail(r, std::string("no dihedral vertex group but ends = ") + to_string(ends));
    else r.witness = "two ends";
  }

  void j(CheckResult& r) {
    for (int v = 0; v < g_.vertex_count(); ++v)
      if (!g_.vertex(v).opaque()) return skip(r, "some vertex group is finite");
    for (int e = 0; e < g_.edge_count(); ++e)
      for (int x = 1; x < g_.edge(e).group.order(); ++x)
        if (omega_.on_edge_group(g_, e, x) == -1)
          fail(r, "edge " + g_.edge(e).id + " element " + g_.edge(e).group.element_name(x) + " has omega -1");
  }

  void k(CheckResult& r) {
    if (!need_tree(r)) return;
    bool any = false, all = true;
    for (int v = 0; v < g_.vertex_count(); ++v) {
      const FiniteGroup& gv = g_.group(v);
      any = any || contains_klein_four(gv);
      all = all && gv.order() == 4 && contains_klein_four(gv);
    }
    if (!any) return skip(r, "no Klein four-group");
    if (!all) return skip(r, "vertex groups are not all Klein four-groups");
    for (const auto& ed : g_.edges())
      if (ed.group.order() != 2) fail(r, "edge " + ed.id + " group has order " + std::to_string(ed.group.order()));
    for (int v = 0; v < g_.vertex_count(); ++v) {
      for (int x = 0; x < 4; ++x)
        if (omega_.vertex_signs[v][x] != 1) {
          fail(r, "non-orientable at vertex " + g_.vertex(v).id);
          break;
        }
      if (g_.valence(v) != 3) fail(r, "vertex " + g_.vertex(v).id + " has valence " + std::to_string(g_.valence(v)));
      std::multiset<int> images;
      for (const auto& ed : g_.edges()) {
        if (ed.group.order() != 2) continue;
        if (ed.o == v) images.insert(ed.into_o(1));
        if (ed.t == v) images.insert(ed.into_t(1));
      }
      if (std::set<int>(images.begin(), images.end()).size() != images.size())
        fail(r, "two edges at " + g_.vertex(v).id + " share an edge group");
    }
    for (int e = 0; e < g_.edge_count(); ++e)
      if (omega_.stable_signs[e] != 1) fail(r, "non-orientable stable letter " + g_.edge(e).id);
    if (g_.vertex_count() % 2 != 0) fail(r, "|V| = " + std::to_string(g_.vertex_count()) + " is odd");
    const Rational rr = Rational(1) - Rational(4) * virtual_euler(g_);
    if (rr.denominator() != 1 || ((rr.numerator() % 4) + 4) % 4 != 1)
      fail(r, "r = " + to_string(rr) + " is not 1 mod 4");
    if (r.status == CheckStatus::Pass)
      r.witness = "valence 3, |V| = " + std::to_string(g_.vertex_count()) + ", r = " + to_string(rr);
  }

  void l(CheckResult& r) {
    if (!need_tree(r)) return;
    bool any = false;
    for (int e = 0; e < g_.edge_count(); ++e) {
      const Edge& ed = g_.edge(e);
      if (!is_nilpotent(g_.group(ed.o)) || !is_nilpotent(g_.group(ed.t))) continue;
      any = true;
      const EdgeClass ec = classify_edge(g_, e);
      if (ec.kind == EdgeKind::Proper)
        fail(r, "edge " + ed.id + " between nilpotent groups is " + ec.str());
    }
    if (!any) skip(r, "no edge between nilpotent vertex groups");
  }

  const GraphOfGroups& g_;
  const OrientationCharacter& omega_;
  int n_;
  int radius_;
  std::optional<BassSerre> bs_;
  std::vector<ElementData> elements_;
  bool loaded_ = false;
};

}  // namespace

CheckReport run_checks(const GraphOfGroups& g, const OrientationCharacter& omega, int n, int max_radius,
                       const std::vector<std::string>& filters) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorKind::InvalidDimension, "n must be even and at least 4, got " + std::to_string(n));
  for (const auto& f : validate(g))
    if (!f.holds) throw Error(ErrorKind::BadInput, "graph is not " + f.name + ": " + f.witness);
  g.check_omega(omega);
  for (const auto& f : filters)
    if (std::find(check_ids().begin(), check_ids().end(), f) == check_ids().end())
      throw Error(ErrorKind::BadInput, "unknown check id " + f);
  Battery battery(g, omega, n, max_radius);
  CheckReport rep;
  rep.n = n;
  for (const auto& id : check_ids()) {
    if (!filters.empty() && std::find(filters.begin(), filters.end(), id) == filters.end()) {
      rep.checks.push_back(CheckResult{id, check_names().at(id), CheckStatus::Skipped, "not selected"});
      continue;
    }
    rep.checks.push_back(battery.run(id));
  }
  rep.overall = aggregate(rep.checks);
  return rep;
}

std::variant<MappingTorusInput, NotSemidirect> mapping_torus_extraction(const GraphOfGroups& g) {
  if (g.vertex_count() == 1 && g.edge_count() == 1) {
    const Edge& e = g.edge(0);
    if (classify_edge(g, 0).kind == EdgeKind::LoopIsomorphism) {
      MappingTorusInput in;
      in.group = g.group(0);
      in.theta = compose(e.into_t, inverse(e.into_o));  // t x t^-1 = theta(x)
      return in;
    }
  }
  if (g.vertex_count() == 2 && g.edge_count() == 1 && classify_edge(g, 0).kind == EdgeKind::MCTie)
    return NotSemidirect{"MC-tie: extension of the infinite dihedral group by the edge group " + g.edge(0).group.name()};
  if (g.all_finite()) {
    const Rational chi = virtual_euler(g);
    if (chi != Rational(0)) return NotSemidirect{"virtual Euler characteristic " + to_string(chi) + " is not 0"};
  }
  return NotSemidirect{"not a single loop isomorphism"};
}

std::string TorusVerdict::str() const {
  if (!realizable) return "NotRealizable: " + reason;
  return std::string("Realizable, ") + (orientable ? "orientable" : "non-orientable");
}

TorusVerdict theorem_d_check(const MappingTorusInput& input) {
  if (input.k < 1) throw Error(ErrorKind::InvalidDimension, "k must be positive");
  if (!is_homomorphism(input.group, input.group, input.theta.images) || !input.theta.injective())
    throw Error(ErrorKind::BadInput, "theta is not an automorphism");
  TorusVerdict v;
  const PeriodicityReport p = periodicity(input.group);
  if (!p.periodic) {
    v.reason = input.group.name() + " does not have periodic cohomology";
    return v;
  }
  v.period = p.period;
  if ((2 * input.k) % *p.period != 0) {
    v.reason = "period " + std::to_string(*p.period) + " does not divide " + std::to_string(2 * input.k);
    return v;
  }
  int value = 0;
  try {
    value = top_homology_automorphism(input.group, input.theta, input.k);
  } catch (const Error& e) {
    throw Error(ErrorKind::UnsupportedGroup, e.what());
  }
  const int m = input.group.order();
  v.multiplier = value;
  if (value % m == 1 % m || (value + 1) % m == 0) {
    v.realizable = true;
    v.orientable = m <= 2 || value % m == 1 % m;
    v.reason = "H_" + std::to_string(2 * input.k - 1) + "(theta) = " + std::to_string(value) + " mod " + std::to_string(m);
  } else {
    v.reason = "H_" + std::to_string(2 * input.k - 1) + "(theta) is multiplication by " + std::to_string(value) +
               " mod " + std::to_string(m) + ", not +-1";
  }
  return v;
}

}  // namespace gog
