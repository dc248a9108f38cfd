#pragma once

#include "leadsto/diagram.hpp"
#include "leadsto/planegraph.hpp"

#include <optional>
#include <vector>

namespace leadsto {

// ---- checkerboard colouring ------------------------------------------------

// Face colours of a diagram projection: 0 = white, 1 = gray.  Adjacent faces
// (sharing an arc) always get opposite colours; the projection of a diagram
// is 4-regular, so this two-colouring exists and is unique once anchored.
// Canonical anchor: the first face in faces() order (the face containing
// dart 0) is white.  Requires at least one crossing.
struct Checkerboard {
    std::vector<int> face_color; // indexed by face id
};
Checkerboard checkerboard(const Projection& p);

// ---- Tait graphs -----------------------------------------------------------

// The two Tait graphs of a projection.  Vertices of `white` are the white
// faces, vertices of `gray` the gray faces; both graphs have one edge per
// crossing, with edge id == crossing id, joining the two same-coloured faces
// meeting diagonally at that crossing.  Rotations are inherited from the
// face walks of the projection, so both graphs carry the embedding induced
// by the diagram and are geometric duals of each other.
struct TaitGraphPair {
    PlaneMultigraph white;
    PlaneMultigraph gray;
    std::vector<int> face_color;     // as in Checkerboard
    std::vector<int> vertex_of_face; // face id -> vertex id in its colour's graph
};
TaitGraphPair tait_graphs(const Projection& p);

// ---- strength --------------------------------------------------------------

// Evidence that a projection is not strong: a simple closed curve meeting the
// diagram transversally in exactly two points, one interior to each of two
// distinct arcs, with at least one crossing on each side.  Such a curve
// exists iff two distinct arcs have the same unordered pair of side faces;
// the witness records the arcs and that face pair.
struct StrengthWitness {
    int arc1 = -1, arc2 = -1;   // arc1 < arc2
    int face1 = -1, face2 = -1; // face1 < face2, the common side faces
};

// True iff no such separating curve exists.  A one-crossing projection is
// vacuously strong; with two or more crossings, strength is equivalent to
// the Tait graphs being 2-connected, which is what this checks.  When the
// answer is false and `witness` is non-null, the first witness in arc-scan
// order is stored.  Requires at least one crossing.
bool is_strong(const Projection& p, StrengthWitness* witness = nullptr);
bool is_strong(const Diagram& d, StrengthWitness* witness = nullptr);

// Splits a diagram along separating curves until every piece is strong: each
// cut deletes the two witness arcs and closes the loose ends on each side
// with a fresh arc.  Crossing counts of the parts sum to the original count.
// Parts are returned sorted by (crossing count, canonical serialization).
// Requires a valid diagram with at least one crossing.
std::vector<Diagram> strong_decomposition(const Diagram& d);

// ---- shape test ------------------------------------------------------------

// Returns n (the crossing count) if the Tait graphs of p are, in either
// order, the n-cycle and the n-bond; otherwise nothing.  These are exactly
// the projections of the standard closed 2-braid diagrams.  Requires at
// least two crossings.
std::optional<int> is_torus_minimal_projection(const Projection& p);

} // namespace leadsto
