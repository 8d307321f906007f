#pragma once

#include "gog/error.hpp"
#include "gog/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gog {

/// Subset of a group of order at most 64, one bit per element index.
using ElementSet = std::uint64_t;

inline bool contains(ElementSet s, int x) { return (s >> x) & 1U; }
inline int set_size(ElementSet s) { return __builtin_popcountll(s); }

/// A finite group given by its multiplication table. Index 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Validates the table (identity at 0, inverses, associativity).
  /// Throws Error{NoIdentity, NoInverse, NotAssociative, BadTable} with a witness.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::map<std::string, int> generators = {}, std::string name = {});

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int power(int a, long long k) const;
  int element_order(int a) const { return orders_[static_cast<std::size_t>(a)]; }
  bool is_abelian() const;

  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::map<std::string, int>& generator_names() const { return generators_; }
  void set_generator_names(std::map<std::string, int> names);

  /// Named generators when supplied, otherwise a greedy small generating set.
  std::vector<int> generating_set() const;
  /// Display name for element x: generator name, "e" for identity, or "#x".
  std::string element_name(int x) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::map<std::string, int> generators_;
  std::string name_;
};

/// Checks that images defines a homomorphism source -> target.
bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target, std::span<const int> images);
bool is_injective(std::span<const int> images);

/// Homomorphism between finite groups as an element map.
struct GroupHom {
  std::vector<int> images;
  bool injective() const { return is_injective(images); }
  int operator()(int x) const { return images[static_cast<std::size_t>(x)]; }
};

GroupHom compose(const GroupHom& outer, const GroupHom& inner);
GroupHom inverse(const GroupHom& bijection);

// ---- subgroups -------------------------------------------------------------

ElementSet closure(const FiniteGroup& g, ElementSet seed);
ElementSet generated(const FiniteGroup& g, std::span<const int> elements);
ElementSet whole(const FiniteGroup& g);
std::vector<int> elements_of(ElementSet s);

/// Every subgroup, sorted by (order, mask). Requires order <= 64.
std::vector<ElementSet> all_subgroups(const FiniteGroup& g);

/// Subgroup as a standalone group; embedding[i] is the parent index of element i.
FiniteGroup subgroup_group(const FiniteGroup& g, ElementSet h, std::vector<int>* embedding = nullptr);

ElementSet normalizer(const FiniteGroup& g, ElementSet h);
ElementSet centralizer(const FiniteGroup& g, ElementSet h);
bool is_normal(const FiniteGroup& g, ElementSet h);

/// Representatives of conjugacy classes, smallest index first.
std::vector<int> conjugacy_class_reps(const FiniteGroup& g);

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);
std::vector<GroupHom> automorphisms(const FiniteGroup& g);
/// Distinct inner automorphisms.
std::vector<GroupHom> inner_automorphisms(const FiniteGroup& g);
/// All injective homomorphisms source -> target.
std::vector<GroupHom> injective_homs(const FiniteGroup& source, const FiniteGroup& target);
/// All homomorphisms g -> {+1,-1}, as sign vectors.
std::vector<std::vector<int>> sign_characters(const FiniteGroup& g);

// ---- structure -------------------------------------------------------------

enum class StructureKind { Trivial, Cyclic, Dihedral, Quaternionic, KleinFour, MetacyclicOther, Other };

const char* to_string(StructureKind kind);

enum class SylowKind { Cyclic, Quaternionic, Other };

struct SylowSummary {
  int prime = 0;
  int order = 1;
  SylowKind kind = SylowKind::Cyclic;
  ElementSet subgroup = 1;
};

struct StructureTag {
  StructureKind kind = StructureKind::Other;
  int parameter = 0;               // m for Cyclic(m), 2m for Dihedral(2m), 2^i for Quaternionic
  std::vector<int> witness;        // isomorphism from the standard model onto g, when claimed
  std::vector<SylowSummary> sylow; // one entry per prime dividing |g|
  std::string str() const;
};

StructureTag classify_structure(const FiniteGroup& g);

/// A dihedral subgroup of order >= 6, if any.
std::optional<ElementSet> dihedral_subgroup_gt2(const FiniteGroup& g);
/// A subgroup isomorphic to Z/p x Z/p for some prime p, if any.
std::optional<ElementSet> elementary_abelian_rank2_subgroup(const FiniteGroup& g);
/// True when g has a subgroup isomorphic to the Klein four group.
bool contains_klein_four(const FiniteGroup& g);
bool is_metacyclic(const FiniteGroup& g);
bool is_dihedral(const FiniteGroup& g);  // D_2m for m >= 2, Klein four included

struct PeriodicityReport {
  bool periodic = false;
  std::optional<int> period;
  std::vector<SylowSummary> sylow;
  std::map<int, int> prime_period;  // p -> p-period, when periodic
};

PeriodicityReport periodicity(const FiniteGroup& g);

// ---- homology of cyclic groups ---------------------------------------------

/// One orbit of a cyclic group C acting on a set, with stabilizer of order d and
/// the sign by which the stabilizer generator acts on the orbit basis element.
struct CyclicOrbit {
  int stabilizer_order = 1;
  int twist = 1;  // +1 or -1
};

/// H_s(C; direct sum of the induced modules Ind_Stab^C(twist)) for C of order q,
/// computed orbit-by-orbit through Shapiro's lemma.
AbelianGroupInvariants cyclic_module_homology(int q, std::span<const CyclicOrbit> orbits, int degree);

/// Multiplier induced by theta on H_{2k-1}(F; Z) = Z/|F| for cyclic F: j^k mod |F|
/// where theta(a) = a^j. Throws Error{Unsupported} for non-cyclic F.
int top_homology_automorphism(const FiniteGroup& f, const GroupHom& theta, int k);

}  // namespace gog
