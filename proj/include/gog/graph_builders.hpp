#pragma once

#include "gog/graph_of_groups.hpp"

namespace gog {

/// Embedding of G_e into g sending each named generator of G_e to the given element.
GroupHom hom_from_generators(const FiniteGroup& source, const FiniteGroup& target,
                             const std::vector<std::pair<int, int>>& generator_images);

/// Power map x -> x^j on a cyclic group with generator named "a".
GroupHom cyclic_power_map(const FiniteGroup& f, int j);

/// A *_C B on vertices "u" (A) and "v" (B) joined by edge "e".
GraphOfGroups amalgam(const FiniteGroup& a, const FiniteGroup& b, const FiniteGroup& c, const GroupHom& into_a,
                      const GroupHom& into_b);

/// F semidirect Z as a single loop at "v": t x t^-1 = theta(x).
GraphOfGroups mapping_torus_graph(const FiniteGroup& f, const GroupHom& theta);

/// Two Klein-four vertices v, w and three edges a, b, c with groups of order 2
/// generated by a, b, ab at v and a', b', a'b' at w.
GraphOfGroups theta_graph();

/// S3 *_{Z/2} S3 amalgamated along a reflection.
GraphOfGroups s3_amalgam();

/// Z/4 *_{Z/2} Z/4 amalgamated along the squares.
GraphOfGroups z4_amalgam();

/// Z/m x Z as a loop isomorphism at Z/m with identity twist.
GraphOfGroups cyclic_times_z(int m);

/// Z/m semidirect Z with t a t^-1 = a^j.
GraphOfGroups cyclic_twist(int m, int j);

}  // namespace gog
