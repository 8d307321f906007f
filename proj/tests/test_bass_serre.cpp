#include "gog/bass_serre.hpp"
#include "gog/graph_builders.hpp"
#include "gog/group_catalog.hpp"

#include <doctest.h>

#include <random>

using namespace gog;

namespace {

Syllable elt(int v, int g) { return Syllable{false, v, g, 0, 1}; }
Syllable stab(int e, int sign) { return Syllable{true, 0, 0, e, sign}; }

int named(const GraphOfGroups& g, int v, const std::string& n) { return g.group(v).generator_names().at(n); }

GroupWord random_word(const GraphOfGroups& g, std::mt19937& rng, int length) {
  std::vector<int> stable;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!g.in_tree(e)) stable.push_back(e);
  GroupWord w;
  for (int i = 0; i < length; ++i) {
    if (!stable.empty() && rng() % 3 == 0) {
      w.push_back(stab(stable[rng() % stable.size()], rng() % 2 ? 1 : -1));
    } else {
      const int v = static_cast<int>(rng() % static_cast<unsigned>(g.vertex_count()));
      w.push_back(elt(v, static_cast<int>(rng() % static_cast<unsigned>(g.group(v).order()))));
    }
  }
  return w;
}

GroupWord concat(GroupWord a, const GroupWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

GroupWord inverse_word(const GraphOfGroups& g, const GroupWord& w) {
  GroupWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Syllable s = *it;
    if (s.stable) s.sign = -s.sign;
    else s.element = g.group(s.vertex).inv(s.element);
    out.push_back(s);
  }
  return out;
}

// Defining relations of the fundamental group, written as syllable words.
std::vector<GroupWord> defining_relations(const GraphOfGroups& g) {
  std::vector<GroupWord> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const FiniteGroup& f = g.group(v);
    for (int a = 1; a < f.order(); ++a)
      for (int b = 1; b < f.order(); b += 2) out.push_back({elt(v, a), elt(v, b), elt(v, f.inv(f.mul(a, b)))});
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    for (int x = 1; x < ed.group.order(); ++x)
      out.push_back({stab(e, 1), elt(ed.o, ed.into_o(x)), stab(e, -1),
                     elt(ed.t, g.group(ed.t).inv(ed.into_t(x)))});
  }
  return out;
}

std::vector<GraphOfGroups> sample_graphs() {
  return {z4_amalgam(), s3_amalgam(), cyclic_times_z(6), cyclic_twist(5, 2), theta_graph()};
}

}  // namespace

TEST_CASE("element orders in Z/4 *_{Z/2} Z/4") {
  const GraphOfGroups g = z4_amalgam();
  const BassSerre bs(g);
  const int a = named(g, 0, "a"), b = named(g, 1, "a");
  const NormalForm x = bs.from_word({elt(0, a)});
  CHECK(bs.element_order(x).order == 4);
  CHECK(bs.is_identity(bs.power(x, 4)));
  const NormalForm ab = bs.from_word({elt(0, a), elt(1, b), elt(0, a), elt(1, b)});
  CHECK_FALSE(bs.element_order(ab).finite);
  CHECK(bs.element_order(ab).str() == "Infinite");
  // a^2 is identified with b^2 through the edge group.
  CHECK(bs.from_word({elt(0, g.group(0).power(a, 2))}) == bs.from_word({elt(1, g.group(1).power(b, 2))}));
  // A conjugate of an elliptic element is elliptic of the same order.
  const NormalForm c = bs.conjugate(ab, bs.from_word({elt(1, b)}));
  CHECK(bs.element_order(c).order == 4);
}

TEST_CASE("stable letters twist the loop group") {
  const GraphOfGroups g = cyclic_twist(5, 2);
  const BassSerre bs(g);
  const int a = named(g, 0, "a");
  const FiniteGroup& f = g.group(0);
  // t a t^-1 = a^2
  CHECK(bs.from_word({stab(0, 1), elt(0, a), stab(0, -1)}) == bs.from_word({elt(0, f.power(a, 2))}));
  CHECK_FALSE(bs.element_order(bs.from_word({stab(0, 1)})).finite);
  CHECK(bs.element_order(bs.from_word({stab(0, 1), elt(0, a), stab(0, -1)})).order == 5);
}

TEST_CASE("tree balls") {
  {
    const GraphOfGroups g = z4_amalgam();
    const BassSerre bs(g);
    CHECK(bs.ball(bs.root(), 1).vertices.size() == 3);
    CHECK(bs.ball(bs.root(), 2).vertices.size() == 5);
  }
  {
    const GraphOfGroups g = s3_amalgam();
    const BassSerre bs(g);
    const TreeBall b = bs.ball(bs.root(), 1);
    CHECK(b.vertices.size() == 4);
    CHECK(b.edges.size() == 3);
    CHECK(bs.ball(bs.root(), 2).vertices.size() == 1 + 3 + 3 * 2);
  }
  {
    const GraphOfGroups g = cyclic_times_z(6);
    const BassSerre bs(g);
    CHECK(bs.ball(bs.root(), 2).vertices.size() == 5);
  }
  {
    const GraphOfGroups g = theta_graph();
    const BassSerre bs(g);
    CHECK(bs.degree(0) == 6);
    CHECK(bs.ball(bs.root(), 2).vertices.size() == 1 + 6 + 6 * 5);
  }
}

TEST_CASE("tree distances and the group action") {
  std::mt19937 rng(7);
  for (const auto& g : sample_graphs()) {
    const BassSerre bs(g);
    const TreeBall b = bs.ball(bs.root(), 3);
    for (std::size_t i = 0; i < b.vertices.size(); ++i) CHECK(bs.distance(bs.root(), b.vertices[i]) == b.distance[i]);
    for (const auto& [p, c] : b.edges) CHECK(bs.distance(b.vertices[p], b.vertices[c]) == 1);
    for (int trial = 0; trial < 20; ++trial) {
      const NormalForm x = bs.from_word(random_word(g, rng, 6));
      const auto& u = b.vertices[rng() % b.vertices.size()];
      const auto& v = b.vertices[rng() % b.vertices.size()];
      CHECK(bs.distance(bs.act(x, u), bs.act(x, v)) == bs.distance(u, v));
      CHECK(bs.geodesic(u, v).size() == static_cast<std::size_t>(bs.distance(u, v) + 1));
    }
  }
}

TEST_CASE("normal forms respect the defining relations") {
  std::mt19937 rng(2024);
  for (const auto& g : sample_graphs()) {
    const BassSerre bs(g);
    const auto rel = defining_relations(g);
    for (const auto& r : rel) CHECK(bs.is_identity(bs.from_word(r)));
    // Inserting a conjugated relation anywhere leaves the normal form unchanged.
    for (int trial = 0; trial < 100; ++trial) {
      const GroupWord w = random_word(g, rng, 8);
      const GroupWord c = random_word(g, rng, 3);
      const std::size_t cut = rng() % (w.size() + 1);
      GroupWord v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
      v = concat(concat(concat(v, c), rel[rng() % rel.size()]), inverse_word(g, c));
      v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
      CHECK(bs.from_word(v) == bs.from_word(w));
    }
  }
}

TEST_CASE("normal-form multiplication is associative") {
  std::mt19937 rng(99);
  for (const auto& g : sample_graphs()) {
    const BassSerre bs(g);
    for (int trial = 0; trial < 500; ++trial) {
      const GroupWord wa = random_word(g, rng, 1 + static_cast<int>(rng() % 7));
      const GroupWord wb = random_word(g, rng, 1 + static_cast<int>(rng() % 7));
      const GroupWord wc = random_word(g, rng, 1 + static_cast<int>(rng() % 4));
      const NormalForm a = bs.from_word(wa), b = bs.from_word(wb), c = bs.from_word(wc);
      REQUIRE(bs.multiply(bs.multiply(a, b), c) == bs.multiply(a, bs.multiply(b, c)));
      REQUIRE(bs.multiply(a, b) == bs.from_word(concat(wa, wb)));
      REQUIRE(bs.is_identity(bs.multiply(a, bs.inverse(a))));
    }
  }
}

TEST_CASE("fixed subtrees of the standard examples") {
  {
    const GraphOfGroups g = cyclic_times_z(6);
    const BassSerre bs(g);
    const auto r = bs.fixed_subtree(bs.from_word({elt(0, g.group(0).power(named(g, 0, "a"), 2))}));
    CHECK(r.order == 3);
    CHECK(r.kind == FixedKind::Line);
    CHECK(r.translation_length == 1);
    CHECK(r.xi == 1);
    CHECK(bs.normalizer_class(r) == NormalizerClass::TwoEnded);
  }
  {
    const GraphOfGroups g = s3_amalgam();
    const BassSerre bs(g);
    const auto r = bs.fixed_subtree(bs.from_word({elt(0, named(g, 0, "r"))}));
    CHECK(r.order == 3);
    CHECK(r.kind == FixedKind::Finite);
    CHECK(r.vertices.size() == 1);
    CHECK(r.xi == -1);
    CHECK(bs.normalizer_class(r) == NormalizerClass::FiniteWithWitness);
    // The reflection fixes an edge and nothing further.
    const auto s = bs.fixed_subtree(bs.from_word({elt(0, named(g, 0, "s"))}));
    CHECK(s.kind == FixedKind::Finite);
    CHECK(s.vertices.size() == 2);
    CHECK(s.edge_count == 1);
  }
  {
    const GraphOfGroups g = z4_amalgam();
    const BassSerre bs(g);
    const auto r = bs.fixed_subtree(bs.from_word({elt(0, g.group(0).power(named(g, 0, "a"), 2))}));
    CHECK(r.kind == FixedKind::Line);
    CHECK(r.translation_length == 2);
    const auto a = bs.fixed_subtree(bs.from_word({elt(0, named(g, 0, "a"))}));
    CHECK(a.kind == FixedKind::Finite);
  }
  {
    const GraphOfGroups g = theta_graph();
    const BassSerre bs(g);
    const auto r = bs.fixed_subtree(bs.from_word({elt(0, named(g, 0, "a"))}));
    CHECK(r.kind == FixedKind::Line);
  }
}

TEST_CASE("fixed-subtree errors") {
  const GraphOfGroups g = z4_amalgam();
  const BassSerre bs(g);
  CHECK_THROWS_AS(bs.fixed_subtree(bs.identity()), Error);
  try {
    bs.fixed_subtree(bs.from_word({elt(0, 1), elt(1, 1)}));
    FAIL("expected NotFiniteOrder");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFiniteOrder);
  }
}

TEST_CASE("xi is invariant under conjugation") {
  std::mt19937 rng(5);
  for (const auto& g : sample_graphs()) {
    const BassSerre bs(g);
    const auto reps = bs.vertex_class_reps();
    for (int trial = 0; trial < 50; ++trial) {
      const auto& [v, x] = reps[rng() % reps.size()];
      const NormalForm w = bs.vertex_element(v, x);
      const NormalForm c = bs.from_word(random_word(g, rng, 5));
      const auto base = bs.fixed_subtree(w);
      const auto moved = bs.fixed_subtree(bs.conjugate(c, w));
      REQUIRE(base.kind != FixedKind::Unresolved);
      CHECK(moved.kind == base.kind);
      CHECK(moved.xi == base.xi);
      CHECK(moved.order == base.order);
      if (base.kind == FixedKind::Finite) CHECK(moved.vertices.size() == base.vertices.size());
      // The fixed vertex found for the conjugate is the image of one for w.
      CHECK(bs.fixes(bs.conjugate(c, w), bs.act(c, base.center)));
    }
  }
}

TEST_CASE("omega on normal forms") {
  const GraphOfGroups g = cyclic_twist(5, 2);
  const BassSerre bs(g);
  OrientationCharacter w = g.trivial_omega();
  w.stable_signs[0] = -1;
  g.check_omega(w);
  const NormalForm t = bs.from_word({stab(0, 1)});
  CHECK(bs.omega(w, t) == -1);
  CHECK(bs.omega(w, bs.multiply(t, t)) == 1);
  CHECK(bs.omega(w, bs.from_word({elt(0, 1)})) == 1);
}
