#pragma once

#include <array>
#include <string>
#include <vector>

#include "leadsto/planegraph.hpp"

namespace leadsto {

// A link diagram on the sphere.  Each crossing lists its four incident arc
// ids in counterclockwise order; the strand through slots 0 and 2 passes
// UNDER the strand through slots 1 and 3.  Rotating the slot labels by 2
// describes the same unoriented crossing; the stored rooting is whatever the
// producing operation chose (parsers root at the incoming under-strand).
struct Crossing {
    std::array<int, 4> arcs{-1, -1, -1, -1};
};

// Per-crossing operation for apply_assignment.  The enum order defines the
// lexicographic order on assignments used for "least assignment" certificates.
//   Keep     leave the crossing as it is
//   Exchange swap which strand passes over (slots rotate by one)
//   SmoothA  delete the crossing, reconnecting slots {0,1} and {2,3}
//   SmoothB  delete the crossing, reconnecting slots {0,3} and {1,2}
// The two smoothings are the two noncrossing reconnections compatible with
// the rotation order; they do not depend on which strand is on top.
enum class CrossingState { Keep, Exchange, SmoothA, SmoothB };

// "keep" / "exchange" / "smooth-a" / "smooth-b".
std::string crossing_state_name(CrossingState s);

struct Diagram {
    std::vector<Crossing> crossings;
    int arc_count = 0;  // arc ids are 0..arc_count-1, each in exactly 2 slots
    int free_loops = 0; // closed components passing through no crossing

    int crossing_count() const { return static_cast<int>(crossings.size()); }
};

// The underlying 4-regular plane multigraph: vertex i = crossing i, edge a =
// arc a (dart 2a at the first slot occurrence in crossing-then-slot scan
// order), rotation(i) = the four slot darts in ccw order.  Free loops are not
// part of the graph.
struct Projection {
    PlaneMultigraph graph;
    int free_loops = 0;
};

Projection projection(const Diagram& d);

// Structural checks, reported in this order of precedence:
//   ArcUse       some arc id is out of range or not used exactly twice
//   NonPlanar    the rotation system fails the Euler check
//   Disconnected more than one component (crossing graph components plus
//                free loops); the crossing-free diagram must be one loop
enum class DiagramDefect { None, ArcUse, NonPlanar, Disconnected };
DiagramDefect validate_diagram(const Diagram& d);

// Applies one state per crossing (a.size() == crossing count).  Kept
// crossings survive in order (Exchange re-roots the slots so the other
// strand is on top); smoothed crossings are replaced by their reconnection;
// strands that close up without passing a kept crossing become free loops.
// Arc ids of the result are renumbered in crossing-then-slot scan order, so
// an all-Keep assignment is the identity on parser-normalized diagrams.  The
// result may be disconnected (legal for intermediate diagrams).
Diagram apply_assignment(const Diagram& d, const std::vector<CrossingState>& a);

// Link components by strand tracing.  Components are numbered in order of
// their smallest (crossing, slot) endpoint; free loops follow.  Each
// crossing is passed twice (once under, once over); in_slot marks where the
// traversal enters.
struct StrandPassage {
    int component = -1;
    int in_slot = -1;
};
struct Strands {
    int component_count = 0;
    std::vector<std::array<StrandPassage, 2>> passages; // [under, over] per crossing
};
Strands trace_strands(const Diagram& d);

int component_count(const Diagram& d);

// Writhe summed over self-crossings only (both passages from the same
// component).  Independent of traversal orientation, so well defined for
// unoriented diagrams; this is the quantity that normalizes the bracket.
int self_writhe(const Diagram& d);

// The medial construction: crossings = edges of g, arcs = corners of g, with
// the strand parallel to each edge passing under.  The result is an
// alternating diagram whose checkerboard graphs are g and its dual.
// Requires g connected with at least one edge.
Diagram medial_diagram(const PlaneMultigraph& g);

// Standard crossing-minimal diagrams of the two target families, built as
// medials: the (2,m) torus link from the plane m-cycle (m >= 2), and the
// m-crossing twist knot from the (m-1)-cycle with one doubled edge (m >= 3;
// m = 3 yields the trefoil).
Diagram build_torus2_diagram(int m);
Diagram build_twist_diagram(int m);

} // namespace leadsto
