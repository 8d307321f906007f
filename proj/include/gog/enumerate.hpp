#pragma once

#include "gog/checks.hpp"
#include "gog/graph_of_groups.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gog {

/// Search space: vertex groups from `groups`, edge groups from `edge_groups`,
/// connected graphs with 1..max_vertices vertices and 1..max_edges edges.
struct Catalog {
  std::vector<FiniteGroup> groups;
  std::vector<FiniteGroup> edge_groups;
  int max_vertices = 1;
  int max_edges = 1;
  int n = 4;
};

struct EnumerationOptions {
  std::vector<std::string> filters;  // check ids; empty runs all
  bool run_battery = true;           // false keeps every reduced indecomposable candidate
  int max_radius = 8;
  int threads = 1;
  std::string progress_path;         // empty: no progress file
  bool resume = false;               // skip candidates up to the index stored in progress_path
};

struct EnumeratedGraph {
  long index = 0;  // position in the deterministic candidate sequence
  GraphOfGroups graph;
  CheckReport report;
};

/// Canonical form under relabelling of vertices, vertex-group automorphisms,
/// edge-group automorphisms, conjugation of each edge map inside its target,
/// and edge reversal. Equal keys mean isomorphic graphs of groups.
std::vector<int> canonical_key(const GraphOfGroups& g);

/// The reduced, indecomposable candidates of the catalog, one per canonical class,
/// in deterministic order.
std::vector<GraphOfGroups> enumerate_candidates(const Catalog& c);

/// Runs the battery (trivial orientation character) on every candidate and calls
/// `emit` in candidate order for each one that is not Obstructed. Returns the
/// number emitted.
long enumerate_graphs(const Catalog& c, const EnumerationOptions& opts,
                      const std::function<void(const EnumeratedGraph&)>& emit);

std::vector<EnumeratedGraph> enumerate_graphs(const Catalog& c, const EnumerationOptions& opts = {});

}  // namespace gog
