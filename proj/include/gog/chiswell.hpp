#pragma once

#include "gog/bass_serre.hpp"
#include "gog/linalg.hpp"

#include <string>
#include <vector>

namespace gog {

/// One <w>-orbit of tree vertices or edges with a non-trivial stabilizer.
struct ChiswellOrbit {
  NormalForm representative;  // a vertex, or the farther endpoint of an edge
  int size = 1;
  int stabilizer_order = 1;
  int twist = 1;              // omega(w)^size
  bool boundary = false;      // edge leaving the window
};

/// H_1 data of the Chiswell sequence restricted to <w>, on one window of the tree.
struct ChiswellWindow {
  int radius = 0;
  std::vector<ChiswellOrbit> vertex_orbits;
  std::vector<ChiswellOrbit> edge_orbits;
  AbelianGroupInvariants vertex_h1;
  AbelianGroupInvariants edge_h1;
  IntMatrix delta;   // rows: counted edge orbits, columns: counted vertex orbits
  AbelianGroupInvariants cokernel;
  bool injective = false;
};

struct ChiswellH1Data {
  int order = 1;
  int omega = 1;
  bool exact_computation = false;  // the non-free part of the tree is finite
  bool branching = false;
  std::vector<int> targets;         // acceptable orders of the right-hand term
  std::vector<ChiswellWindow> windows;
};

enum class ChiswellVerdict { Consistent, Obstructed, Inconclusive };
const char* to_string(ChiswellVerdict v);

struct ChiswellResult {
  ChiswellVerdict verdict = ChiswellVerdict::Inconclusive;
  std::string witness;
  ChiswellH1Data data;
};

/// Orbits of counted type (stabilizer > 1 and twist +1) are the ones with H_1 = Z/d.
bool counted(const ChiswellOrbit& o);

/// Throws NotFiniteOrder, TrivialElement, UnresolvedSubtree, and BadOrientation
/// when omega(w) = -1 without allow_reversing.
ChiswellH1Data chiswell_h1(const BassSerre& bs, const OrientationCharacter& omega, const NormalForm& w,
                           int max_radius = 8, bool allow_reversing = false);

ChiswellResult hchis_obstruction(const BassSerre& bs, const OrientationCharacter& omega, const NormalForm& w,
                                 int max_radius = 8, bool allow_reversing = false);

}  // namespace gog
