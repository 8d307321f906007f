#pragma once

#include "gog/graph_of_groups.hpp"
#include "gog/linalg.hpp"

#include <string>
#include <vector>

namespace gog {

/// A letter is a generator index with exponent +1 or -1.
struct Letter {
  int gen = 0;
  int exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::string word_str(const Word& w) const;
  std::string str() const;
};

/// Freely and cyclically reduces a relator.
Word cyclically_reduce(Word w);
Word free_reduce(Word w);
Word inverse(const Word& w);

/// Cayley-graph presentation of a finite group over its generating set; elements
/// get spelled as the breadth-first words returned in `spelling`.
Presentation group_presentation(const FiniteGroup& g, std::vector<Word>* spelling = nullptr);

/// Presentation of the fundamental group: vertex presentations, one stable letter
/// per non-tree edge, edge relations, tree letters set to 1. Throws
/// UnsupportedOpaqueVertex. With `simplify`, Tietze eliminations are applied.
Presentation fundamental_presentation(const GraphOfGroups& g, bool simplify = true);

/// Removes generators that occur exactly once in some relator, highest index first.
Presentation tietze_reduce(Presentation p);

/// Abelianization as the cokernel of the relator exponent-sum matrix.
AbelianGroupInvariants abelianization(const Presentation& p);

}  // namespace gog
