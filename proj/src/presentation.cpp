#include "gog/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gog {

std::string Presentation::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const int power = static_cast<int>(j - i) * w[i].exp;
    if (i > 0) os << " ";
    os << generators[static_cast<std::size_t>(w[i].gen)];
    if (power != 1) os << "^" << power;
    i = j;
  }
  return os.str();
}

std::string Presentation::str() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i];
  os << " |";
  for (std::size_t i = 0; i < relators.size(); ++i) os << (i ? ", " : " ") << word_str(relators[i]);
  os << ">";
  return os.str();
}

Word free_reduce(Word w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclically_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a].gen == w[b - 1].gen && w[a].exp == -w[b - 1].exp) {
    ++a;
    --b;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(a), w.begin() + static_cast<std::ptrdiff_t>(b));
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

Presentation group_presentation(const FiniteGroup& g, std::vector<Word>* spelling) {
  const std::vector<int> gens = g.generating_set();
  Presentation p;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string name = g.element_name(gens[i]);
    if (name.starts_with("#")) name = "g" + std::to_string(i + 1);
    p.generators.push_back(name);
  }
  // Breadth-first spanning tree of the Cayley graph.
  std::vector<Word> word(static_cast<std::size_t>(g.order()));
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  seen[0] = true;
  std::vector<int> queue{0};
  std::set<std::pair<int, int>> tree_edges;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = g.mul(x, gens[i]);
      if (seen[y]) continue;
      seen[y] = true;
      word[y] = word[x];
      word[y].push_back({static_cast<int>(i), 1});
      tree_edges.insert({x, static_cast<int>(i)});
      queue.push_back(y);
    }
  }
  std::set<Word> relators;
  for (int x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (tree_edges.contains({x, static_cast<int>(i)})) continue;
      Word r = word[x];
      r.push_back({static_cast<int>(i), 1});
      const Word back = inverse(word[g.mul(x, gens[i])]);
      r.insert(r.end(), back.begin(), back.end());
      r = cyclically_reduce(r);
      if (!r.empty()) relators.insert(r);
    }
  p.relators.assign(relators.begin(), relators.end());
  if (spelling) *spelling = std::move(word);
  return p;
}

namespace {

Word shifted(const Word& w, int offset) {
  Word out;
  for (const auto& l : w) out.push_back({l.gen + offset, l.exp});
  return out;
}

void append(Word& w, const Word& tail) { w.insert(w.end(), tail.begin(), tail.end()); }

}  // namespace

Presentation fundamental_presentation(const GraphOfGroups& g, bool simplify) {
  for (int v = 0; v < g.vertex_count(); ++v) (void)g.group(v);  // throws on opaque vertices
  Presentation p;
  std::vector<int> offset(static_cast<std::size_t>(g.vertex_count()));
  std::vector<std::vector<Word>> spelling(static_cast<std::size_t>(g.vertex_count()));
  std::vector<Presentation> local;
  std::map<std::string, int> name_uses;
  for (int v = 0; v < g.vertex_count(); ++v) {
    local.push_back(group_presentation(g.group(v), &spelling[v]));
    for (const auto& n : local.back().generators) ++name_uses[n];
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    offset[v] = static_cast<int>(p.generators.size());
    for (const auto& n : local[v].generators)
      p.generators.push_back(name_uses[n] > 1 ? g.vertex(v).id + "." + n : n);
    for (const auto& r : local[v].relators) p.relators.push_back(shifted(r, offset[v]));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    std::optional<int> stable;
    if (!g.in_tree(e)) {
      stable = static_cast<int>(p.generators.size());
      p.generators.push_back("t_" + ed.id);
    }
    for (int x : ed.group.generating_set()) {
      const Word wo = shifted(spelling[ed.o][ed.into_o(x)], offset[ed.o]);
      const Word wt = shifted(spelling[ed.t][ed.into_t(x)], offset[ed.t]);
      Word r;
      if (stable) r.push_back({*stable, 1});
      append(r, wo);
      if (stable) r.push_back({*stable, -1});
      append(r, inverse(wt));
      r = cyclically_reduce(r);
      if (!r.empty()) p.relators.push_back(r);
    }
  }
  return simplify ? tietze_reduce(std::move(p)) : p;
}

Presentation tietze_reduce(Presentation p) {
  for (;;) {
    for (auto& r : p.relators) r = cyclically_reduce(r);
    std::erase_if(p.relators, [](const Word& r) { return r.empty(); });
    {
      std::set<Word> seen;
      std::vector<Word> unique;
      for (auto& r : p.relators)
        if (seen.insert(r).second) unique.push_back(r);
      p.relators = std::move(unique);
    }
    // Highest-index generator occurring exactly once in some relator.
    int best_gen = -1;
    std::size_t best_rel = 0;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      std::map<int, int> count;
      for (const auto& l : p.relators[i]) ++count[l.gen];
      for (const auto& [gen, c] : count)
        if (c == 1 && (gen > best_gen || (gen == best_gen && p.relators[i].size() < p.relators[best_rel].size()))) {
          best_gen = gen;
          best_rel = i;
        }
    }
    if (best_gen < 0) return p;
    // r = A x^e B  =>  x^e = A^-1 B^-1.
    const Word r = p.relators[best_rel];
    const auto pos = static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [&](const Letter& l) { return l.gen == best_gen; }) - r.begin());
    const Word a(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
    const Word b(r.begin() + static_cast<std::ptrdiff_t>(pos) + 1, r.end());
    Word value = inverse(a);
    append(value, inverse(b));
    if (r[pos].exp == -1) value = inverse(value);
    value = free_reduce(value);
    std::vector<Word> next;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (i == best_rel) continue;
      Word w;
      for (const auto& l : p.relators[i]) {
        if (l.gen == best_gen)
          append(w, l.exp == 1 ? value : inverse(value));
        else
          w.push_back(l);
      }
      for (auto& l : w)
        if (l.gen > best_gen) --l.gen;
      next.push_back(w);
    }
    p.relators = std::move(next);
    p.generators.erase(p.generators.begin() + best_gen);
  }
}

AbelianGroupInvariants abelianization(const Presentation& p) {
  IntMatrix m = int_matrix(static_cast<Eigen::Index>(p.generators.size()), static_cast<Eigen::Index>(p.relators.size()));
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (const auto& l : p.relators[j]) m(l.gen, static_cast<Eigen::Index>(j)) += Integer(l.exp);
  return cokernel_invariants(m);
}

}  // namespace gog
