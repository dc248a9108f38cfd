#pragma once

// Test-side corpus machinery: exhaustive enumeration of small plane maps (the
// source of exhaustive diagram corpora via the medial construction), random
// map/diagram generation, and a connected-sum splicer.

#include <functional>
#include <random>
#include <vector>

#include "leadsto/diagram.hpp"
#include "leadsto/planegraph.hpp"

namespace leadsto::testsupport {

// All connected plane maps with 1..max_edges edges, one representative per
// isomorphism class (reflections identified).  Grown by edge insertion: every
// connected map either has a non-bridge edge (re-added as a chord, parallel,
// or loop across a face) or is a tree with a leaf edge (re-added as a pendant),
// so the closure of the two 1-edge seeds under these moves is exhaustive.
void enumerate_connected_maps(
    int max_edges, const std::function<void(const PlaneMultigraph&)>& visit);

// All 2-connected plane multigraphs (loopless, >= 2 vertices, no cut vertex;
// the smallest is the 2-cycle) with 2..max_edges edges, one per isomorphism
// class.  Grown from the 2-cycle by edge subdivision and by adding an edge
// between two corners of a common face at distinct vertices: every
// 2-connected graph has a degree-2 vertex to un-subdivide or, failing that,
// min degree 3 and hence a deletable edge keeping 2-connectivity (Halin), so
// these moves reach everything.
void enumerate_biconnected_maps(
    int max_edges, const std::function<void(const PlaneMultigraph&)>& visit);

// Successor sets used by the enumerators, exposed for the completeness
// cross-check against brute-force rotation-system gluing.
std::vector<PlaneMultigraph> map_successors(const PlaneMultigraph& g);
std::vector<PlaneMultigraph> biconnected_successors(const PlaneMultigraph& g);

// The two 1-edge seeds: a single loop and a single link edge.
PlaneMultigraph loop_map();
PlaneMultigraph link_map();

PlaneMultigraph subdivide_edge(const PlaneMultigraph& g, int e);

// Brute-force ground truth for the enumerators: every connected plane map
// with exactly `edges` edges, produced by trying all vertex permutations of
// the 2*edges darts as rotation systems (feasible for edges <= 4).  Returns
// the set of canonical codes.
std::vector<std::vector<uint16_t>> gluing_map_codes(int edges);

// Random connected plane map with exactly `edges` >= 1 edges (seeded walk
// over the growth moves; diverse but not uniform).
PlaneMultigraph random_connected_map(int edges, std::mt19937& rng);

// Random valid diagram with exactly `crossings` >= 1 crossings: the medial of
// a random map with that many edges, with each crossing flipped by a coin
// toss (so diagrams are generally non-alternating).
Diagram random_diagram(int crossings, std::mt19937& rng);

// Connected sum: splices diagram b into diagram a across the given arcs,
// producing a diagram with the two summands separated by a 2-arc sphere.
Diagram connected_sum(const Diagram& a, int arc_a, const Diagram& b, int arc_b);

} // namespace leadsto::testsupport
