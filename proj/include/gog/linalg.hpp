#pragma once

#include "gog/error.hpp"
#include "gog/integer.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gog {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = Matrix<Integer>;

/// Builds an IntMatrix from nested rows of machine integers.
IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows);
IntMatrix int_matrix(Eigen::Index rows, Eigen::Index cols);

template <typename Scalar>
struct SnfResult {
  std::vector<Scalar> diagonal;  // length min(rows, cols); nonnegative, d_i | d_{i+1}
  Matrix<Scalar> left;           // rows x rows, unimodular
  Matrix<Scalar> right;          // cols x cols, unimodular
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

// Quotient rounded toward negative infinity.
template <typename Scalar>
Scalar floor_quotient(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if (!(q * b == a) && ((a < Scalar(0)) != (b < Scalar(0)))) q = q - Scalar(1);
  return q;
}

}  // namespace detail

/// Smith normal form with transforms: left * a * right == diag(diagonal).
///
/// Pivot is the nonzero entry of least magnitude in the active block; the
/// pivot row and column are cleared by repeated division with remainder.
template <typename Scalar>
SnfResult<Scalar> smith_normal_form(const Matrix<Scalar>& a) {
  using detail::abs_value;
  using detail::floor_quotient;
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  Matrix<Scalar> d = a;
  Matrix<Scalar> left = Matrix<Scalar>::Identity(m, m);
  Matrix<Scalar> right = Matrix<Scalar>::Identity(n, n);
  const Scalar zero(0);

  const Eigen::Index rank_bound = std::min(m, n);
  for (Eigen::Index t = 0; t < rank_bound; ++t) {
    for (;;) {
      // Least-magnitude pivot in d[t:, t:].
      std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
      for (Eigen::Index i = t; i < m; ++i) {
        for (Eigen::Index j = t; j < n; ++j) {
          if (d(i, j) == zero) continue;
          if (!best || abs_value(d(i, j)) < abs_value(d(best->first, best->second))) best = {i, j};
        }
      }
      if (!best) break;
      if (best->first != t) {
        d.row(t).swap(d.row(best->first));
        left.row(t).swap(left.row(best->first));
      }
      if (best->second != t) {
        d.col(t).swap(d.col(best->second));
        right.col(t).swap(right.col(best->second));
      }

      bool dirty = false;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (d(i, t) == zero) continue;
        const Scalar q = floor_quotient(d(i, t), d(t, t));
        d.row(i) -= q * d.row(t);
        left.row(i) -= q * left.row(t);
        if (!(d(i, t) == zero)) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (d(t, j) == zero) continue;
        const Scalar q = floor_quotient(d(t, j), d(t, t));
        d.col(j) -= q * d.col(t);
        right.col(j) -= q * right.col(t);
        if (!(d(t, j) == zero)) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide the rest of the block; otherwise fold the
      // offending row in and reduce again.
      std::optional<Eigen::Index> bad_row;
      for (Eigen::Index i = t + 1; i < m && !bad_row; ++i) {
        for (Eigen::Index j = t + 1; j < n; ++j) {
          const Scalar q = d(i, j) / d(t, t);
          if (!(q * d(t, t) == d(i, j))) {
            bad_row = i;
            break;
          }
        }
      }
      if (!bad_row) break;
      d.row(t) += d.row(*bad_row);
      left.row(t) += left.row(*bad_row);
    }
    if (d(t, t) < zero) {
      d.row(t) = -d.row(t);
      left.row(t) = -left.row(t);
    }
  }

  SnfResult<Scalar> out;
  out.diagonal.reserve(static_cast<std::size_t>(rank_bound));
  for (Eigen::Index t = 0; t < rank_bound; ++t) out.diagonal.push_back(d(t, t));
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

/// Finitely generated abelian group in invariant-factor form.
struct AbelianGroupInvariants {
  long free_rank = 0;
  std::vector<Integer> torsion;  // each > 1, each divides the next

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_cyclic_of_order(const Integer& q) const;
  /// Order of a finite group; nullopt when free rank is positive.
  std::optional<Integer> order() const;
  std::string str() const;

  friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;
};

/// Canonical invariants of Z^free_rank plus the cyclic groups Z/c for c in cyclic_orders.
/// Orders equal to 0 count as free summands; 1s are dropped.
AbelianGroupInvariants abelian_group(long free_rank, const std::vector<Integer>& cyclic_orders);

AbelianGroupInvariants direct_sum(const AbelianGroupInvariants& a, const AbelianGroupInvariants& b);

/// Z^rows / column-span(a).
AbelianGroupInvariants cokernel_invariants(const IntMatrix& a);

/// Rank of an integer matrix.
long rank(const IntMatrix& a);

/// Homology of a bounded chain complex of free abelian groups.
///
/// boundaries[k] is the map C_{k+1} -> C_k (rows = rank C_k, cols = rank C_{k+1}).
/// Returns H_0 .. H_{boundaries.size()}.
std::vector<AbelianGroupInvariants> complex_homology(const std::vector<IntMatrix>& boundaries);

/// One integer solution of a * x == b, if any.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

/// Determinant by fraction-free elimination.
Integer determinant(const IntMatrix& a);

}  // namespace gog
