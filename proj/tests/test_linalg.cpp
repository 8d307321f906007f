#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gog;

namespace {

std::vector<long> diag_longs(const SnfResult<Integer>& r) {
  std::vector<long> out;
  for (const auto& d : r.diagonal) out.push_back(d.to_int64());
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, int max_dim, int bound) {
  std::uniform_int_distribution<int> dim(1, max_dim), entry(-bound, bound);
  IntMatrix m = int_matrix(dim(rng), dim(rng));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Integer(entry(rng));
  return m;
}

}  // namespace

TEST_CASE("smith normal form on small cases") {
  CHECK(diag_longs(smith_normal_form<Integer>(int_matrix({{2, 0}, {0, 3}}))) == std::vector<long>{1, 6});
  CHECK(diag_longs(smith_normal_form<Integer>(int_matrix(2, 3))) == std::vector<long>{0, 0});
  CHECK(diag_longs(smith_normal_form<Integer>(int_matrix({{1, 2}, {3, 4}}))) == std::vector<long>{1, 2});
}

TEST_CASE("smith normal form works with machine integers") {
  Matrix<long long> a(2, 2);
  a << 4, 6, 6, 8;
  const auto r = smith_normal_form<long long>(a);
  CHECK(r.diagonal == std::vector<long long>{2, 2});
  CHECK((r.left * a * r.right) == (Matrix<long long>(2, 2) << 2, 0, 0, 2).finished());
}

TEST_CASE("cokernel invariants") {
  const auto c = cokernel_invariants(int_matrix({{2, 0}, {0, 3}}));
  CHECK(c.free_rank == 0);
  CHECK(c.torsion == std::vector<Integer>{Integer(6)});
  const auto z = cokernel_invariants(int_matrix(2, 3));
  CHECK(z.free_rank == 2);
  CHECK(z.torsion.empty());
  const auto v = cokernel_invariants(int_matrix({{2}, {4}}));
  CHECK(v.free_rank == 1);
  CHECK(v.torsion == std::vector<Integer>{Integer(2)});
  CHECK(v.str() == "Z + Z/2");
}

TEST_CASE("finite cokernel agrees with a coset count") {
  const IntMatrix a = int_matrix({{2, 4, 0}, {4, 0, 4}});
  const auto inv = cokernel_invariants(a);
  for (long k : {2L, 4L}) {
    long expected = 1;
    for (const auto& t : inv.torsion) expected *= std::gcd(k, t.to_int64());
    CHECK(oracle::cokernel_k_torsion_count(a, 8, k) == expected);
  }
}

TEST_CASE("abelian group canonical form") {
  CHECK(abelian_group(0, {Integer(2), Integer(3)}).torsion == std::vector<Integer>{Integer(6)});
  CHECK(abelian_group(1, {Integer(4), Integer(6), Integer(0), Integer(1)}).str() == "Z^2 + Z/2 + Z/12");
}

TEST_CASE("complex homology") {
  const auto h = complex_homology({int_matrix({{2}})});
  CHECK(h[0].is_cyclic_of_order(Integer(2)));
  CHECK(h[1].is_trivial());

  const auto z = complex_homology({int_matrix({{0}})});
  CHECK(z[0] == abelian_group(1, {}));
  CHECK(z[1] == abelian_group(1, {}));

  // Periodic resolution of Z/3 tensored with Z: d1 = g-1 = 0, d2 = N = 3.
  const auto c3 = complex_homology({int_matrix({{0}}), int_matrix({{3}}), int_matrix({{0}})});
  CHECK(c3[0] == abelian_group(1, {}));
  CHECK(c3[1].is_cyclic_of_order(Integer(3)));
  CHECK(c3[2].is_trivial());

  CHECK_THROWS_AS(complex_homology({int_matrix({{1}}), int_matrix({{1}})}), Error);
  try {
    complex_homology({int_matrix({{1}}), int_matrix({{1}})});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CompositionNonzero);
  }
  CHECK_THROWS_AS(complex_homology({int_matrix(2, 2), int_matrix(3, 1)}), Error);
}

TEST_CASE("integer solving and determinants") {
  const IntMatrix a = int_matrix({{2, 1}, {1, 3}});
  CHECK(determinant(a) == Integer(5));
  CHECK(determinant(int_matrix({{0, 1}, {1, 0}})) == Integer(-1));
  const auto x = solve_integer(int_matrix({{2, 0}, {0, 3}}), int_matrix({{4}, {9}}));
  REQUIRE(x);
  CHECK((*x)(0, 0) == Integer(2));
  CHECK((*x)(1, 0) == Integer(3));
  CHECK_FALSE(solve_integer(int_matrix({{2}}), int_matrix({{3}})));
}

TEST_CASE("arbitrary precision survives large entries") {
  IntMatrix big = int_matrix({{1, 0}, {0, 1}});
  big(0, 0) = Integer::from_string("123456789012345678901234567890");
  big(1, 1) = Integer::from_string("987654321098765432109876543210");
  const auto r = smith_normal_form<Integer>(big);
  IntMatrix d = int_matrix(2, 2);
  d(0, 0) = r.diagonal[0];
  d(1, 1) = r.diagonal[1];
  CHECK(r.left * big * r.right == d);
  CHECK(r.diagonal[0] == gcd(big(0, 0), big(1, 1)));
}

TEST_CASE("random matrices: transforms, divisibility and coset counts") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix a = random_matrix(rng, 4, 9);
    const auto r = smith_normal_form<Integer>(a);
    IntMatrix d = int_matrix(a.rows(), a.cols());
    for (std::size_t i = 0; i < r.diagonal.size(); ++i) d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = r.diagonal[i];
    CHECK(r.left * a * r.right == d);
    CHECK(abs(determinant(r.left)) == Integer(1));
    CHECK(abs(determinant(r.right)) == Integer(1));
    for (std::size_t i = 0; i + 1 < r.diagonal.size(); ++i) {
      if (r.diagonal[i].is_zero()) {
        CHECK(r.diagonal[i + 1].is_zero());
      } else {
        CHECK((r.diagonal[i + 1] % r.diagonal[i]).is_zero());
      }
    }
  }
  // Brute-force coset counts on small matrices with entries in [-3,3].
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = random_matrix(rng, 3, 3);
    const auto inv = cokernel_invariants(a);
    if (inv.free_rank != 0) continue;
    const long exponent = inv.torsion.empty() ? 1 : inv.torsion.back().to_int64();
    for (long k = 1; k <= exponent; ++k) {
      if (exponent % k != 0) continue;
      long expected = 1;
      for (const auto& t : inv.torsion) expected *= std::gcd(k, t.to_int64());
      const auto got = oracle::cokernel_k_torsion_count(a, exponent, k);
      if (!got) continue;
      CHECK(*got == expected);
      ++compared;
    }
  }
  CHECK(compared > 50);
}

TEST_CASE("homology is invariant under change of basis") {
  std::mt19937 rng(11);
  const IntMatrix d1 = int_matrix({{2, 0, 0}, {0, 0, 0}});
  const IntMatrix d2 = int_matrix({{0}, {3}, {0}});
  const auto base = complex_homology({d1, d2});
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    // Unimodular change of basis on C_1 via an elementary matrix product.
    IntMatrix u = IntMatrix::Identity(3, 3);
    for (int s = 0; s < 4; ++s) {
      IntMatrix e = IntMatrix::Identity(3, 3);
      const int i = s % 3, j = (s + 1) % 3;
      e(i, j) = Integer(entry(rng));
      u = u * e;
    }
    const IntMatrix uinv = *solve_integer(u, IntMatrix(IntMatrix::Identity(3, 3)));
    CHECK(complex_homology({IntMatrix(d1 * uinv), IntMatrix(u * d2)}) == base);
  }
}
