#include "gog/group_catalog.hpp"

#include <map>
#include <regex>

namespace gog {

FiniteGroup group_from_generators(const Element& identity, const std::vector<Element>& generators,
                                  const Multiply& mul, const std::vector<std::string>& names,
                                  std::string group_name) {
  std::map<Element, int> index{{identity, 0}};
  std::vector<Element> elems{identity};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : generators) {
      Element y = mul(elems[head], s);
      if (index.emplace(y, static_cast<int>(elems.size())).second) elems.push_back(std::move(y));
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = index.at(mul(elems[i], elems[j]));
  std::map<std::string, int> gens;
  for (std::size_t i = 0; i < names.size() && i < generators.size(); ++i) {
    const int idx = index.at(generators[i]);
    if (idx != 0) gens[names[i]] = idx;
  }
  return FiniteGroup::from_table(std::move(table), std::move(gens), std::move(group_name));
}

FiniteGroup trivial_group() { return FiniteGroup::from_table({{0}}, {}, "Z1"); }

FiniteGroup cyclic_group(int m, const std::string& generator) {
  if (m < 1) throw Error(ErrorKind::BadInput, "cyclic group order must be positive");
  if (m == 1) return trivial_group();
  auto mul = [m](const Element& a, const Element& b) { return Element{(a[0] + b[0]) % m}; };
  return group_from_generators({0}, {{1}}, mul, {generator}, "Z" + std::to_string(m));
}

FiniteGroup dihedral_group(int two_m) {
  if (two_m < 2 || two_m % 2 != 0) throw Error(ErrorKind::BadInput, "dihedral order must be even");
  const int m = two_m / 2;
  // (i, a) = r^i s^a; s r = r^-1 s.
  auto mul = [m](const Element& x, const Element& y) {
    const int j = x[1] == 0 ? y[0] : (m - y[0]) % m;
    return Element{(x[0] + j) % m, (x[1] + y[1]) % 2};
  };
  return group_from_generators({0, 0}, {{1 % m, 0}, {0, 1}}, mul, {"r", "s"}, "D" + std::to_string(two_m));
}

FiniteGroup dicyclic_group(int order) {
  if (order < 4 || order % 4 != 0) throw Error(ErrorKind::BadInput, "dicyclic order must be a multiple of 4");
  const int n = order / 4;
  const int two_n = 2 * n;
  // (a, b) = x^a y^b with y x = x^-1 y and y^2 = x^n.
  auto mul = [n, two_n](const Element& p, const Element& q) {
    int a = q[0];
    if (p[1] == 1) a = (two_n - a) % two_n;
    a = (p[0] + a) % two_n;
    int b = p[1] + q[1];
    if (b == 2) {
      b = 0;
      a = (a + n) % two_n;
    }
    return Element{a, b};
  };
  return group_from_generators({0, 0}, {{1, 0}, {0, 1}}, mul, {"x", "y"}, "Dic" + std::to_string(order));
}

FiniteGroup quaternion_group(int order) {
  if (order < 8 || (order & (order - 1)) != 0)
    throw Error(ErrorKind::BadInput, "quaternionic order must be a power of 2, at least 8");
  FiniteGroup g = dicyclic_group(order);
  g.set_name("Q" + std::to_string(order));
  return g;
}

FiniteGroup klein_four_group() {
  auto mul = [](const Element& a, const Element& b) { return Element{a[0] ^ b[0], a[1] ^ b[1]}; };
  return group_from_generators({0, 0}, {{1, 0}, {0, 1}}, mul, {"a", "b"}, "V4");
}

FiniteGroup metacyclic_group(int m, int n, int r) {
  if (m < 1 || n < 1) throw Error(ErrorKind::BadInput, "metacyclic parameters must be positive");
  long long rn = 1;
  for (int i = 0; i < n; ++i) rn = rn * r % m;
  if (rn % m != 1 % m) throw Error(ErrorKind::BadInput, "r^n must be 1 mod m");
  std::vector<int> rpow(static_cast<std::size_t>(n));
  long long x = 1 % m;
  for (int i = 0; i < n; ++i, x = x * r % m) rpow[static_cast<std::size_t>(i)] = static_cast<int>((x % m + m) % m);
  // (i, j) = a^i b^j with b a b^-1 = a^r.
  auto mul = [m, n, rpow](const Element& p, const Element& q) {
    const long long i = (p[0] + static_cast<long long>(q[0]) * rpow[static_cast<std::size_t>(p[1])]) % m;
    return Element{static_cast<int>(i), (p[1] + q[1]) % n};
  };
  return group_from_generators({0, 0}, {{1 % m, 0}, {0, 1 % n}}, mul, {"a", "b"},
                               "M" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  auto mul = [&](const Element& x, const Element& y) { return Element{a.mul(x[0], y[0]), b.mul(x[1], y[1])}; };
  std::vector<Element> gens;
  std::vector<std::string> names;
  for (const auto& [label, idx] : a.generator_names()) {
    gens.push_back({idx, 0});
    names.push_back(label + "1");
  }
  for (const auto& [label, idx] : b.generator_names()) {
    gens.push_back({0, idx});
    names.push_back(label + "2");
  }
  // Fall back to all elements when names do not generate.
  for (int x : a.generating_set())
    if (std::find(gens.begin(), gens.end(), Element{x, 0}) == gens.end()) gens.push_back({x, 0});
  for (int y : b.generating_set())
    if (std::find(gens.begin(), gens.end(), Element{0, y}) == gens.end()) gens.push_back({0, y});
  return group_from_generators({0, 0}, gens, mul, names, a.name() + "x" + b.name());
}

namespace {

FiniteGroup permutation_group(int n, const std::vector<Element>& gens, const std::string& name) {
  Element id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
  // (p q)(i) = p(q(i)).
  auto mul = [](const Element& p, const Element& q) {
    Element out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[static_cast<std::size_t>(q[i])];
    return out;
  };
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return group_from_generators(id, gens, mul, names, name);
}

Element cycle(int n, std::initializer_list<int> points) {
  Element p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  const std::vector<int> c(points);
  for (std::size_t i = 0; i < c.size(); ++i) p[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
  return p;
}

}  // namespace

FiniteGroup symmetric_group(int n) {
  if (n < 1) throw Error(ErrorKind::BadInput, "symmetric degree must be positive");
  if (n == 1) return trivial_group();
  Element rot(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rot[static_cast<std::size_t>(i)] = (i + 1) % n;
  return permutation_group(n, {cycle(n, {0, 1}), rot}, "S" + std::to_string(n));
}

FiniteGroup alternating_group(int n) {
  if (n < 3) return trivial_group();
  std::vector<Element> gens;
  for (int k = 2; k < n; ++k) gens.push_back(cycle(n, {0, 1, k}));
  return permutation_group(n, gens, "A" + std::to_string(n));
}

FiniteGroup special_linear_group(int p) {
  if (p < 2) throw Error(ErrorKind::BadInput, "SL(2,p) needs a prime p");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error(ErrorKind::BadInput, "SL(2,p) needs a prime p");
  // Row-major 2x2 matrices mod p.
  auto mul = [p](const Element& a, const Element& b) {
    return Element{(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p,
                   (a[2] * b[0] + a[3] * b[2]) % p, (a[2] * b[1] + a[3] * b[3]) % p};
  };
  return group_from_generators({1, 0, 0, 1}, {{1, 1, 0, 1}, {1, 0, 1, 1}}, mul, {"u", "l"},
                               "SL(2," + std::to_string(p) + ")");
}

std::vector<FiniteGroup> shipped_catalog() {
  std::vector<FiniteGroup> out;
  out.push_back(trivial_group());
  for (int m = 2; m <= 24; ++m) out.push_back(cyclic_group(m));
  out.push_back(klein_four_group());
  for (int two_m : {6, 8, 10, 12, 14, 16, 18, 20, 22, 24}) out.push_back(dihedral_group(two_m));
  for (int q : {8, 16, 32}) out.push_back(quaternion_group(q));
  for (int d : {12, 20, 24}) out.push_back(dicyclic_group(d));
  out.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
  out.push_back(direct_product(klein_four_group(), cyclic_group(2)));
  out.push_back(direct_product(cyclic_group(3), cyclic_group(3)));
  out.push_back(direct_product(cyclic_group(2), cyclic_group(6)));
  out.push_back(direct_product(cyclic_group(3), dihedral_group(6)));
  out.push_back(direct_product(cyclic_group(3), quaternion_group(8)));
  out.push_back(direct_product(cyclic_group(5), dihedral_group(6)));
  out.push_back(metacyclic_group(5, 4, 2));
  out.push_back(metacyclic_group(7, 3, 2));
  out.push_back(alternating_group(4));
  out.push_back(symmetric_group(4));
  out.push_back(special_linear_group(3));
  out.push_back(direct_product(cyclic_group(2), alternating_group(4)));
  out.push_back(direct_product(cyclic_group(2), special_linear_group(3)));
  return out;
}

std::optional<FiniteGroup> named_group(const std::string& name) {
  std::smatch m;
  if (name == "V4") return klein_four_group();
  if (name == "S3") return dihedral_group(6);
  if (name == "A4") return alternating_group(4);
  if (name == "S4") return symmetric_group(4);
  if (name == "SL(2,3)") return special_linear_group(3);
  try {
    if (std::regex_match(name, m, std::regex(R"(Z(\d+))"))) return cyclic_group(std::stoi(m[1]));
    if (std::regex_match(name, m, std::regex(R"(D(\d+))"))) return dihedral_group(std::stoi(m[1]));
    if (std::regex_match(name, m, std::regex(R"(Q(\d+))"))) return quaternion_group(std::stoi(m[1]));
    if (std::regex_match(name, m, std::regex(R"(Dic(\d+))"))) return dicyclic_group(std::stoi(m[1]));
    if (std::regex_match(name, m, std::regex(R"(Z(\d+)xZ(\d+))")))
      return direct_product(cyclic_group(std::stoi(m[1])), cyclic_group(std::stoi(m[2])));
    if (std::regex_match(name, m, std::regex(R"(M(\d+),(\d+),(\d+))")))
      return metacyclic_group(std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]));
  } catch (const Error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

FiniteGroup relabel(const FiniteGroup& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n || perm[0] != 0 || !is_injective(perm))
    throw Error(ErrorKind::BadInput, "relabel needs a permutation fixing 0");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[perm[a]][perm[b]] = perm[g.mul(a, b)];
  std::map<std::string, int> gens;
  for (const auto& [label, idx] : g.generator_names()) gens[label] = perm[idx];
  return FiniteGroup::from_table(std::move(table), std::move(gens), g.name());
}

}  // namespace gog
