#include "gog/enumerate.hpp"
#include "gog/graph_builders.hpp"
#include "gog/group_catalog.hpp"
#include "gog/presentation.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace gog;

namespace {

// Invariants compared pairwise to confirm the output has no duplicates.
struct Invariants {
  std::vector<int> groups;
  std::vector<int> degrees;
  std::vector<std::string> edge_classes;
  std::string abelianization;
  auto operator<=>(const Invariants&) const = default;
};

Invariants invariants(const GraphOfGroups& g) {
  Invariants inv;
  for (int v = 0; v < g.vertex_count(); ++v) {
    inv.groups.push_back(g.group(v).order());
    inv.degrees.push_back(g.valence(v));
  }
  for (const auto& e : classify_edges(g)) inv.edge_classes.push_back(e.str());
  std::sort(inv.groups.begin(), inv.groups.end());
  std::sort(inv.degrees.begin(), inv.degrees.end());
  std::sort(inv.edge_classes.begin(), inv.edge_classes.end());
  inv.abelianization = abelianization(fundamental_presentation(g)).str();
  return inv;
}

}  // namespace

TEST_CASE("canonical keys") {
  const GraphOfGroups theta = theta_graph();
  CHECK(canonical_key(theta) == canonical_key(theta));
  // Swapping the two vertices gives the same key.
  std::vector<Vertex> vs{theta.vertex(1), theta.vertex(0)};
  std::vector<Edge> es;
  for (const Edge& e : theta.edges()) es.push_back(Edge{e.id, 1 - e.o, 1 - e.t, e.group, e.into_o, e.into_t});
  CHECK(canonical_key(GraphOfGroups::make(vs, es)) == canonical_key(theta));
  CHECK(canonical_key(theta) != canonical_key(s3_amalgam()));
  CHECK(canonical_key(cyclic_twist(5, 2)) == canonical_key(cyclic_twist(5, 3)));  // reversal
  CHECK(canonical_key(cyclic_twist(5, 2)) != canonical_key(cyclic_twist(5, 4)));
}

TEST_CASE("Z/2 catalog emits the loop isomorphism") {
  const FiniteGroup z2 = cyclic_group(2);
  const auto out = enumerate_graphs(Catalog{{z2}, {z2}, 1, 1, 4});
  REQUIRE(out.size() == 1);
  CHECK(classify_edge(out[0].graph, 0).kind == EdgeKind::LoopIsomorphism);
}

TEST_CASE("Z/3 catalog: loop isomorphisms only") {
  const FiniteGroup z3 = cyclic_group(3);
  const auto out = enumerate_graphs(Catalog{{z3}, {z3}, 2, 2, 4});
  // Identity and inversion twists.
  REQUIRE(out.size() == 2);
  std::set<std::vector<int>> keys;
  for (const auto& e : out) {
    CHECK(e.graph.vertex_count() == 1);
    CHECK(e.graph.edge_count() == 1);
    CHECK(classify_edge(e.graph, 0).kind == EdgeKind::LoopIsomorphism);
    keys.insert(canonical_key(e.graph));
  }
  CHECK(keys.contains(canonical_key(cyclic_twist(3, 1))));
  CHECK(keys.contains(canonical_key(cyclic_twist(3, 2))));
}

TEST_CASE("Klein-four search isolates the theta graph") {
  const Catalog c{{klein_four_group()}, {cyclic_group(2)}, 2, 4, 4};
  const auto out = enumerate_graphs(c, EnumerationOptions{{}, true, 8, 4, "", false});
  REQUIRE(out.size() == 1);
  CHECK(canonical_key(out[0].graph) == canonical_key(theta_graph()));
  CHECK(out[0].report.overall == Verdict::Unresolved);
}

TEST_CASE("output is duplicate-free and zero-Euler candidates are single edges") {
  const FiniteGroup z2 = cyclic_group(2), z4 = cyclic_group(4);
  const Catalog c{{z2, z4}, {z2}, 2, 2, 4};
  const auto all = enumerate_candidates(c);
  REQUIRE_FALSE(all.empty());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(canonical_key(all[i]) != canonical_key(all[j]));
  for (const auto& g : all) {
    const bool zero = virtual_euler(g) == Rational(0);
    const bool single = g.edge_count() == 1 && classify_edge(g, 0).kind != EdgeKind::Proper;
    CHECK(zero == single);
  }
  const auto survivors = enumerate_graphs(c);
  for (std::size_t i = 0; i < survivors.size(); ++i)
    for (std::size_t j = i + 1; j < survivors.size(); ++j)
      CHECK(invariants(survivors[i].graph) != invariants(survivors[j].graph));
}

TEST_CASE("monotone in the catalog") {
  const FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3), z4 = cyclic_group(4);
  const auto small = enumerate_graphs(Catalog{{z4}, {z2}, 2, 2, 4});
  const auto large = enumerate_graphs(Catalog{{z4, z3}, {z2}, 2, 2, 4});
  std::set<std::vector<int>> keys;
  for (const auto& e : large) keys.insert(canonical_key(e.graph));
  for (const auto& e : small) CHECK(keys.contains(canonical_key(e.graph)));
  CHECK(large.size() >= small.size());
}

TEST_CASE("threads do not change the output; progress resumes") {
  const FiniteGroup z2 = cyclic_group(2), z4 = cyclic_group(4);
  const Catalog c{{z2, z4}, {z2, z4}, 2, 2, 4};
  const auto one = enumerate_graphs(c);
  const auto four = enumerate_graphs(c, EnumerationOptions{{}, true, 8, 4, "", false});
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].index == four[i].index);

  REQUIRE(one.size() >= 2);
  const std::string path = "enumerate_progress.txt";
  {
    std::ofstream out(path);
    out << one[0].index << '\n';
  }
  const auto rest = enumerate_graphs(c, EnumerationOptions{{}, true, 8, 1, path, true});
  REQUIRE(rest.size() == one.size() - 1);
  CHECK(rest.front().index == one[1].index);
  std::ifstream in(path);
  long last = -1;
  in >> last;
  CHECK(last == one.back().index);
  std::remove(path.c_str());
}

TEST_CASE("bad catalogs") {
  CHECK_THROWS_AS(enumerate_candidates(Catalog{{}, {cyclic_group(2)}, 1, 1, 4}), Error);
  CHECK_THROWS_AS(enumerate_candidates(Catalog{{cyclic_group(2)}, {cyclic_group(2)}, 0, 1, 4}), Error);
  CHECK_THROWS_AS(enumerate_graphs(Catalog{{cyclic_group(2)}, {cyclic_group(2)}, 1, 1, 5}), Error);
}
