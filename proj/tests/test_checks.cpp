#include "gog/checks.hpp"
#include "gog/graph_builders.hpp"
#include "gog/group_catalog.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace gog;

namespace {

OrientationCharacter odd_powers_reverse(const GraphOfGroups& g) {
  OrientationCharacter w = g.trivial_omega();
  for (int v = 0; v < g.vertex_count(); ++v) {
    const FiniteGroup& f = g.group(v);
    const int a = f.generator_names().at("a");
    for (int k = 0; k < f.order(); ++k) w.vertex_signs[v][f.power(a, k)] = k % 2 ? -1 : 1;
  }
  g.check_omega(w);
  return w;
}

GraphOfGroups dumbbell() {
  const FiniteGroup v4 = klein_four_group();
  const FiniteGroup z2 = cyclic_group(2);
  const int a = v4.generator_names().at("a"), b = v4.generator_names().at("b"), ab = v4.mul(a, b);
  const int g = z2.generator_names().at("a");
  auto h = [&](int x) { return hom_from_generators(z2, v4, {{g, x}}); };
  return GraphOfGroups::make({Vertex{"v", v4}, Vertex{"w", v4}},
                             {Edge{"e", 0, 0, z2, h(a), h(b)}, Edge{"f", 0, 1, z2, h(ab), h(ab)},
                              Edge{"g", 1, 1, z2, h(a), h(b)}});
}

void no_failures(const CheckReport& r) {
  for (const auto& c : r.checks) {
    INFO(c.id << " " << c.name << ": " << c.witness);
    CHECK(c.status != CheckStatus::Fail);
  }
}

}  // namespace

TEST_CASE("S3 amalgam is obstructed") {
  const GraphOfGroups g = s3_amalgam();
  const CheckReport r = run_checks(g, g.trivial_omega(), 4);
  CHECK(r.overall == Verdict::Obstructed);
  for (const char* id : {"c", "d", "e", "f"}) {
    INFO(id << ": " << r.check(id).witness);
    CHECK(r.check(id).status == CheckStatus::Fail);
  }
  CHECK(r.check("g").status == CheckStatus::Pass);
  CHECK(r.check("i").status == CheckStatus::Skipped);  // S3 is dihedral
}

TEST_CASE("two-ended examples survive") {
  SUBCASE("Z/4 x Z") {
    const GraphOfGroups g = cyclic_times_z(4);
    const CheckReport r = run_checks(g, g.trivial_omega(), 4);
    no_failures(r);
    CHECK(r.overall == Verdict::Candidate);
    CHECK(r.check("i").status == CheckStatus::Pass);
    CHECK(r.check("l").status == CheckStatus::Pass);
  }
  SUBCASE("Z/5 semidirect Z, t acting by squaring") {
    const GraphOfGroups g = cyclic_twist(5, 2);
    OrientationCharacter w = g.trivial_omega();
    w.stable_signs[0] = -1;
    const CheckReport r = run_checks(g, w, 4);
    no_failures(r);
    CHECK(r.overall == Verdict::Candidate);
  }
  SUBCASE("Z/4 amalgam with the reversing character") {
    const GraphOfGroups g = z4_amalgam();
    const CheckReport r = run_checks(g, odd_powers_reverse(g), 4);
    no_failures(r);
    CHECK(r.check("l").status == CheckStatus::Pass);  // MC-tie
  }
  SUBCASE("Z/4 amalgam, trivial character") {
    const GraphOfGroups g = z4_amalgam();
    const CheckReport r = run_checks(g, g.trivial_omega(), 4);
    CHECK(r.check("e").status == CheckStatus::Fail);
  }
}

TEST_CASE("period must divide n") {
  // Q8 has period 4, so two ends force 4 | n.
  const GraphOfGroups q8 = mapping_torus_graph(quaternion_group(8), GroupHom{[] {
                                                  std::vector<int> id(8);
                                                  std::iota(id.begin(), id.end(), 0);
                                                  return id;
                                                }()});
  const CheckReport r4 = run_checks(q8, q8.trivial_omega(), 4, 6, {"h"});
  CHECK(r4.check("h").status == CheckStatus::Pass);
  const CheckReport r6 = run_checks(q8, q8.trivial_omega(), 6, 6, {"h"});
  CHECK(r6.check("h").status == CheckStatus::Fail);
  CHECK(r6.check("a").status == CheckStatus::Skipped);
}

TEST_CASE("theta graph is unresolved") {
  const GraphOfGroups g = theta_graph();
  const CheckReport r = run_checks(g, g.trivial_omega(), 4);
  no_failures(r);
  CHECK(r.overall == Verdict::Unresolved);
  CHECK(r.check("h").status == CheckStatus::Inconclusive);
  CHECK(r.check("k").status == CheckStatus::Pass);
  CHECK(r.check("k").witness.find("r = 5") != std::string::npos);
}

TEST_CASE("dumbbell fails the nilpotent edge check") {
  const GraphOfGroups g = dumbbell();
  const CheckReport r = run_checks(g, g.trivial_omega(), 4);
  CHECK(r.check("l").status == CheckStatus::Fail);
  CHECK(r.check("k").status == CheckStatus::Pass);
  CHECK(r.overall == Verdict::Obstructed);
}

TEST_CASE("input errors") {
  const GraphOfGroups g = cyclic_times_z(4);
  for (int n : {2, 3, 5}) {
    try {
      run_checks(g, g.trivial_omega(), n);
      FAIL("expected InvalidDimension");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidDimension);
    }
  }
  CHECK_THROWS_AS(run_checks(g, g.trivial_omega(), 4, 8, {"z"}), Error);
  // A trivial amalgam along the whole group is not reduced.
  const FiniteGroup z2 = cyclic_group(2);
  const GroupHom id = hom_from_generators(z2, z2, {{z2.generator_names().at("a"), z2.generator_names().at("a")}});
  const GraphOfGroups unreduced = amalgam(z2, z2, z2, id, id);
  try {
    run_checks(unreduced, unreduced.trivial_omega(), 4);
    FAIL("expected BadInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadInput);
  }
}

TEST_CASE("nilpotency") {
  CHECK(is_nilpotent(cyclic_group(12)));
  CHECK(is_nilpotent(quaternion_group(8)));
  CHECK(is_nilpotent(dihedral_group(8)));
  CHECK_FALSE(is_nilpotent(dihedral_group(6)));
  CHECK_FALSE(is_nilpotent(alternating_group(4)));
  CHECK(is_nilpotent(direct_product(cyclic_group(3), klein_four_group())));
}

TEST_CASE("mapping torus extraction") {
  const auto t = mapping_torus_extraction(cyclic_twist(5, 2));
  REQUIRE(std::holds_alternative<MappingTorusInput>(t));
  const auto& in = std::get<MappingTorusInput>(t);
  const int a = in.group.generator_names().at("a");
  CHECK(in.theta(a) == in.group.power(a, 2));
  const auto mc = mapping_torus_extraction(z4_amalgam());
  REQUIRE(std::holds_alternative<NotSemidirect>(mc));
  CHECK(std::get<NotSemidirect>(mc).reason.find("MC-tie") != std::string::npos);
  CHECK(std::holds_alternative<NotSemidirect>(mapping_torus_extraction(theta_graph())));
}

TEST_CASE("mapping torus realizability against the lifted resolution") {
  for (int m = 2; m <= 13; ++m) {
    const FiniteGroup f = cyclic_group(m);
    for (int j = 1; j < m; ++j) {
      if (std::gcd(j, m) != 1) continue;
      for (int k = 1; k <= 3; ++k) {
        const TorusVerdict v = theorem_d_check({f, cyclic_power_map(f, j), k});
        const long long oracle_value = oracle::lifted_top_degree(m, j, k);
        INFO("m=" << m << " j=" << j << " k=" << k << " " << v.str());
        REQUIRE(v.multiplier.has_value());
        CHECK(*v.multiplier % m == oracle_value);
        const bool pm1 = oracle_value == 1 % m || oracle_value == m - 1;
        CHECK(v.realizable == pm1);
        if (pm1) CHECK(v.orientable == (oracle_value == 1 % m || m == 2));
        // theta and its inverse give the same answer.
        const TorusVerdict inv = theorem_d_check({f, inverse(cyclic_power_map(f, j)), k});
        CHECK(inv.realizable == v.realizable);
        CHECK(inv.orientable == v.orientable);
      }
    }
  }
  const TorusVerdict q8 = theorem_d_check({quaternion_group(8), GroupHom{{0, 1, 2, 3, 4, 5, 6, 7}}, 1});
  CHECK_FALSE(q8.realizable);  // period 4 does not divide 2
  CHECK_FALSE(theorem_d_check({klein_four_group(), GroupHom{{0, 1, 2, 3}}, 2}).realizable);
  CHECK_THROWS_AS(theorem_d_check({quaternion_group(8), GroupHom{{0, 1, 2, 3, 4, 5, 6, 7}}, 2}), Error);
}
