#pragma once

#include "gog/finite_group.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gog {

using Element = std::vector<int>;
using Multiply = std::function<Element(const Element&, const Element&)>;

/// Closes the generators under multiplication and tabulates the result.
/// Element 0 of the table is `identity`; generator i gets the name names[i].
FiniteGroup group_from_generators(const Element& identity, const std::vector<Element>& generators,
                                  const Multiply& mul, const std::vector<std::string>& names = {},
                                  std::string group_name = {});

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int m, const std::string& generator = "a");
/// Dihedral group of order 2m: <r, s | r^m, s^2, s r s^-1 r>.
FiniteGroup dihedral_group(int two_m);
/// Generalized quaternion group Q(2^i): <x, y | x^{2^{i-1}}, x^{2^{i-2}} y^-2, y x y^-1 x>.
FiniteGroup quaternion_group(int order);
/// Dicyclic group of order 4n: <x, y | x^{2n}, x^n y^-2, y x y^-1 x>.
FiniteGroup dicyclic_group(int order);
FiniteGroup klein_four_group();
/// Z/m semidirect Z/n with b a b^-1 = a^r (requires r^n = 1 mod m).
FiniteGroup metacyclic_group(int m, int n, int r);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
/// SL(2, p) for a prime p.
FiniteGroup special_linear_group(int p);

/// Groups shipped for catalog-wide tests, all of order <= 48.
std::vector<FiniteGroup> shipped_catalog();

/// Builds a group from a short name: Z<m>, D<2m>, Q<2^i>, Dic<4n>, V4, S3, S4, A4,
/// SL(2,3), Z<m>xZ<n>, or M<m>,<n>,<r> for metacyclic_group(m, n, r). nullopt if unknown.
std::optional<FiniteGroup> named_group(const std::string& name);

/// Relabels elements by a permutation fixing 0: new index perm[x] for old x.
FiniteGroup relabel(const FiniteGroup& g, const std::vector<int>& perm);

}  // namespace gog
