#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "leadsto/planegraph.hpp"

namespace leadsto {

// Target graph families for minor searches.  Fixed vertex/edge numbering
// (used by MinorWitness):
//   Cycle m      vertices 0..m-1, edge i joins (i, (i+1) mod m)          m>=2
//   Bond m       vertices {0,1}, edges 0..m-1 all join (0,1)             m>=2
//   CyclePlus k  Cycle k plus edge k joining (0,1) parallel to edge 0    k>=2
//   BondPlus k   vertices {0,1,2}; edges 0..k-2 join (0,1); edge k-1
//                joins (0,2); edge k joins (2,1)                         k>=2
// CyclePlus k is the theta graph with branch lengths (1,1,k-1); BondPlus k
// is its planar dual (a k-bond with one edge subdivided once).
enum class MinorTarget { Cycle, Bond, CyclePlus, BondPlus };

int target_vertex_count(MinorTarget t, int m);
std::vector<std::pair<int, int>> target_edge_list(MinorTarget t, int m);
std::string target_name(MinorTarget t, int m); // "C5", "B5", "C4+", "B4+"

// The target as a plane multigraph in its standard embedding (edge ids and
// endpoints as in target_edge_list).
PlaneMultigraph target_plane_graph(MinorTarget t, int m);

// Name of g if it is plane-isomorphic to one of the four targets ("C5",
// "B5", "C4+", "B4+"); empty string otherwise.
std::string recognize_target_shape(const PlaneMultigraph& g);

// Certificate that the target is a minor of a host graph: disjoint connected
// branch sets (one per target vertex) plus an injective edge map whose host
// edges join the right branch sets.
struct MinorWitness {
    MinorTarget target = MinorTarget::Cycle;
    int m = 0;
    std::vector<std::vector<int>> branch_sets; // per target vertex; sorted
    std::vector<int> edge_map;                 // per target edge: host edge id
};

// Independent checker; does not share logic with the searches.
bool verify_minor_witness(const PlaneMultigraph& g, const MinorWitness& w,
                          std::string* error = nullptr);

// A simple cycle: vertices[i] --edges[i]-- vertices[(i+1) mod size].  A loop
// is a 1-cycle, a pair of parallel edges a 2-cycle.
struct CycleWitness {
    std::vector<int> vertices;
    std::vector<int> edges;
};

// Exact circumference (0 for forests).  When a witness is requested, the
// lexicographically least canonical form among the longest cycles is
// reported.
int circumference(const PlaneMultigraph& g, CycleWitness* witness = nullptr);

// Three internally disjoint u-v paths; each path runs from u to v.
struct ThetaSubgraph {
    int u = -1, v = -1;
    std::array<std::vector<int>, 3> path_vertices;
    std::array<std::vector<int>, 3> path_edges;
};

// Witness iff the circumference is at least m.
std::optional<MinorWitness> find_cycle_minor(const PlaneMultigraph& g, int m);
// Witness iff the dual has circumference at least m (the dual cycle pulls
// back to a minimal edge cut, i.e. a bond, of g).  Requires g connected.
std::optional<MinorWitness> find_bond_minor(const PlaneMultigraph& g, int m);
// Theta(1,1,c) = CyclePlus(c+1), c >= 1: witness iff some theta subgraph has
// a branch of length >= c.  The theta found is reported via *theta.
std::optional<MinorWitness> find_theta_minor(const PlaneMultigraph& g, int c,
                                             ThetaSubgraph* theta = nullptr);

// DOT rendering with branch sets as colored clusters.
std::string witness_to_dot(const PlaneMultigraph& g, const MinorWitness& w,
                           const std::string& name = "witness");

} // namespace leadsto
