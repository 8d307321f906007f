#include "gog/linalg.hpp"

#include <map>
#include <sstream>

namespace gog {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CompositionNonzero: return "CompositionNonzero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::BadStabilizer: return "BadStabilizer";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NonInjectiveEdgeMap: return "NonInjectiveEdgeMap";
    case ErrorKind::BadOrientation: return "BadOrientation";
    case ErrorKind::UnsupportedOpaqueVertex: return "UnsupportedOpaqueVertex";
    case ErrorKind::PositiveEulerNontrivial: return "PositiveEulerNontrivial";
    case ErrorKind::NotFiniteOrder: return "NotFiniteOrder";
    case ErrorKind::UnresolvedSubtree: return "UnresolvedSubtree";
    case ErrorKind::TrivialElement: return "TrivialElement";
    case ErrorKind::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorKind::InvalidDimension: return "InvalidDimension";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = rows.empty() ? 0 : static_cast<Eigen::Index>(rows.front().size());
  IntMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != c)
      throw Error(ErrorKind::DimensionMismatch, "ragged rows");
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Integer(rows[i][j]);
  }
  return m;
}

IntMatrix int_matrix(Eigen::Index rows, Eigen::Index cols) {
  IntMatrix m(rows, cols);
  m.setConstant(Integer(0));
  return m;
}

bool AbelianGroupInvariants::is_cyclic_of_order(const Integer& q) const {
  if (free_rank != 0) return false;
  if (q == Integer(1)) return torsion.empty();
  return torsion.size() == 1 && torsion.front() == q;
}

std::optional<Integer> AbelianGroupInvariants::order() const {
  if (free_rank != 0) return std::nullopt;
  Integer o(1);
  for (const auto& t : torsion) o *= t;
  return o;
}

std::string AbelianGroupInvariants::str() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// Factor a positive machine-sized integer into prime powers.
std::map<Integer, int> factor(Integer n) {
  std::map<Integer, int> out;
  for (Integer p(2); p * p <= n; p += Integer(1)) {
    while ((n % p).is_zero()) {
      ++out[p];
      n = n / p;
    }
  }
  if (n > Integer(1)) ++out[n];
  return out;
}

}  // namespace

AbelianGroupInvariants abelian_group(long free_rank, const std::vector<Integer>& cyclic_orders) {
  AbelianGroupInvariants g;
  g.free_rank = free_rank;
  // Collect prime powers per prime, then recombine largest-first.
  std::map<Integer, std::vector<Integer>> by_prime;
  for (const auto& c0 : cyclic_orders) {
    const Integer c = abs(c0);
    if (c.is_zero()) {
      ++g.free_rank;
      continue;
    }
    if (c == Integer(1)) continue;
    for (const auto& [p, e] : factor(c)) {
      Integer pe(1);
      for (int i = 0; i < e; ++i) pe *= p;
      by_prime[p].push_back(pe);
    }
  }
  std::size_t slots = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    slots = std::max(slots, powers.size());
  }
  std::vector<Integer> factors(slots, Integer(1));
  for (const auto& [p, powers] : by_prime)
    for (std::size_t i = 0; i < powers.size(); ++i) factors[i] *= powers[i];
  std::reverse(factors.begin(), factors.end());
  g.torsion = std::move(factors);
  return g;
}

AbelianGroupInvariants direct_sum(const AbelianGroupInvariants& a, const AbelianGroupInvariants& b) {
  std::vector<Integer> all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  return abelian_group(a.free_rank + b.free_rank, all);
}

AbelianGroupInvariants cokernel_invariants(const IntMatrix& a) {
  const auto snf = smith_normal_form<Integer>(a);
  long nonzero = 0;
  std::vector<Integer> torsion;
  for (const auto& d : snf.diagonal) {
    if (d.is_zero()) continue;
    ++nonzero;
    if (d > Integer(1)) torsion.push_back(d);
  }
  AbelianGroupInvariants g;
  g.free_rank = static_cast<long>(a.rows()) - nonzero;
  g.torsion = std::move(torsion);
  return g;
}

long rank(const IntMatrix& a) {
  const auto snf = smith_normal_form<Integer>(a);
  return static_cast<long>(std::count_if(snf.diagonal.begin(), snf.diagonal.end(),
                                         [](const Integer& d) { return !d.is_zero(); }));
}

std::vector<AbelianGroupInvariants> complex_homology(const std::vector<IntMatrix>& boundaries) {
  const std::size_t top = boundaries.size();
  std::vector<long> dims(top + 1, 0);
  if (top == 0) return {AbelianGroupInvariants{}};
  dims[0] = static_cast<long>(boundaries[0].rows());
  for (std::size_t k = 0; k < top; ++k) {
    if (static_cast<long>(boundaries[k].rows()) != dims[k])
      throw Error(ErrorKind::DimensionMismatch, "boundary " + std::to_string(k + 1) + " has wrong row count");
    dims[k + 1] = static_cast<long>(boundaries[k].cols());
  }
  for (std::size_t k = 0; k + 1 < top; ++k) {
    const IntMatrix comp = boundaries[k] * boundaries[k + 1];
    for (Eigen::Index i = 0; i < comp.rows(); ++i)
      for (Eigen::Index j = 0; j < comp.cols(); ++j)
        if (!comp(i, j).is_zero())
          throw Error(ErrorKind::CompositionNonzero,
                      "d" + std::to_string(k + 1) + " o d" + std::to_string(k + 2) + " != 0 at (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
  }

  std::vector<long> ranks(top);
  std::vector<std::vector<Integer>> torsion(top);
  for (std::size_t k = 0; k < top; ++k) {
    const auto snf = smith_normal_form<Integer>(boundaries[k]);
    long r = 0;
    for (const auto& d : snf.diagonal) {
      if (d.is_zero()) continue;
      ++r;
      if (d > Integer(1)) torsion[k].push_back(d);
    }
    ranks[k] = r;
  }

  std::vector<AbelianGroupInvariants> out(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    const long outgoing = k == 0 ? 0 : ranks[k - 1];  // rank of d_k : C_k -> C_{k-1}
    const long incoming = k < top ? ranks[k] : 0;     // rank of d_{k+1}
    out[k].free_rank = dims[k] - outgoing - incoming;
    if (k < top) out[k].torsion = torsion[k];
  }
  return out;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "solve_integer");
  // L a R = D  =>  a x = b  <=>  D y = L b with x = R y.
  const auto snf = smith_normal_form<Integer>(a);
  const IntMatrix lb = snf.left * b;
  IntMatrix y = int_matrix(a.cols(), b.cols());
  for (Eigen::Index i = 0; i < lb.rows(); ++i) {
    for (Eigen::Index j = 0; j < lb.cols(); ++j) {
      const bool on_diag = i < static_cast<Eigen::Index>(snf.diagonal.size());
      const Integer d = on_diag ? snf.diagonal[static_cast<std::size_t>(i)] : Integer(0);
      if (d.is_zero()) {
        if (!lb(i, j).is_zero()) return std::nullopt;
        continue;
      }
      if (!(lb(i, j) % d).is_zero()) return std::nullopt;
      y(i, j) = lb(i, j) / d;
    }
  }
  return IntMatrix(snf.right * y);
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return Integer(1);
  // Bareiss elimination.
  IntMatrix m = a;
  Integer sign(1);
  Integer prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k).is_zero()) ++swap;
      if (swap == n) return Integer(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace gog
