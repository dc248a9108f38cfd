#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace leadsto {

// A multigraph embedded in the sphere, represented by a rotation system.
//
// Vertices are 0..vertex_count()-1 and edges 0..edge_count()-1.  Edge e owns
// two darts 2e and 2e+1 (dart 2e sits at the first endpoint passed to
// add_edge).  Loops and parallel edges are first-class: a loop contributes
// both of its darts to the rotation of its vertex.  rotation(v) lists the
// darts leaving v in counterclockwise order around v.
//
// Faces are the orbits of d -> rotation_next(mate(d)); for a rotation system
// that actually comes from a sphere embedding, V - E + F == 2 holds on every
// connected component (checked by is_planar()).
class PlaneMultigraph {
public:
    PlaneMultigraph() = default;
    explicit PlaneMultigraph(int vertex_count);

    static constexpr int mate(int dart) { return dart ^ 1; }
    static constexpr int edge_of(int dart) { return dart >> 1; }

    int vertex_count() const { return static_cast<int>(rot_.size()); }
    int edge_count() const { return static_cast<int>(ends_.size()); }
    int dart_count() const { return 2 * edge_count(); }

    // Builds a graph from explicit data: ends[e] gives the endpoints of edge
    // e (dart 2e at ends[e].first), rotations[v] the ccw dart order around v.
    // Throws std::invalid_argument on inconsistent input.
    static PlaneMultigraph from_rotation_system(
        std::vector<std::pair<int, int>> ends,
        std::vector<std::vector<int>> rotations);

    int add_vertex();
    // Appends the new darts at the end of each endpoint's rotation.
    int add_edge(int u, int v);
    // Inserts the new darts at given rotation positions: after insertion the
    // dart at u occupies index pos_u in rotation(u) (0 <= pos_u <= deg(u)).
    // For a loop (u == v) the positions refer to the rotation before
    // insertion of either dart; they must differ and pos_u < pos_v means the
    // dart 2e lands before dart 2e+1.
    int insert_edge_at(int u, int pos_u, int v, int pos_v);

    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    std::pair<int, int> ends(int e) const { return ends_[e]; }
    int vertex_of_dart(int d) const { return dart_vertex_[d]; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    bool is_loop(int e) const { return ends_[e].first == ends_[e].second; }

    // Next dart counterclockwise around the vertex of d.
    int rot_next(int d) const;
    int rot_prev(int d) const;
    // Next dart along the face of d (orbit generator for faces()).
    int face_next(int d) const { return rot_next(mate(d)); }

    // All faces, each as its dart walk; deterministic order (walks start at
    // the smallest dart of the face).
    const std::vector<std::vector<int>>& faces() const;
    int face_count() const { return static_cast<int>(faces().size()); }
    int face_of_dart(int d) const;

    // Connected components of the underlying graph (vertex -> component id,
    // numbered by smallest member vertex).
    std::vector<int> vertex_components() const;
    int component_count() const;
    bool is_connected() const;

    // Euler check V - E + F == 2 on every connected component.
    bool is_planar() const;

    // Geometric dual; requires a connected graph with at least one edge.
    // Edge ids are preserved: dual edge e joins the two faces sides of e.
    PlaneMultigraph dual() const;

    void invalidate_caches();

private:
    std::vector<std::vector<int>> rot_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<int> dart_vertex_;
    mutable std::vector<std::vector<int>> faces_cache_;
    mutable std::vector<int> face_of_dart_cache_;
    mutable bool faces_valid_ = false;
};

// ---- blocks ----------------------------------------------------------------

// A block of the block decomposition: a maximal 2-connected subgraph, a
// bridge, or a loop edge.
struct Block {
    std::vector<int> edges;    // sorted edge ids
    std::vector<int> vertices; // sorted vertex ids
    bool is_loop = false;
    bool is_bridge = false;
    bool degenerate() const { return is_loop || is_bridge; }
};

// Block decomposition (loops become their own degenerate blocks).  Blocks are
// ordered by their smallest edge id.  Isolated vertices belong to no block.
std::vector<Block> blocks(const PlaneMultigraph& g);

// Cut vertices, sorted.
std::vector<int> cut_vertices(const PlaneMultigraph& g);

// Connected, no loops, no cut vertex, and not a single bridge: i.e. the block
// decomposition is one non-degenerate block covering the whole graph.  A pair
// of parallel edges counts as 2-connected.
bool is_biconnected(const PlaneMultigraph& g);

// ---- isomorphism / canonical codes ----------------------------------------

// Canonical code of a connected map; two connected maps have equal codes iff
// they are isomorphic as maps (preserving rotations; with allow_reflection
// also reversing all rotations).
std::vector<uint16_t> canonical_map_code(const PlaneMultigraph& g,
                                         bool allow_reflection = true);

bool plane_isomorphic(const PlaneMultigraph& a, const PlaneMultigraph& b,
                      bool allow_reflection = true);

// ---- shape recognizers -----------------------------------------------------

// Cycle with m >= 2 edges (a pair of parallel edges is a 2-cycle)?
bool is_cycle_graph(const PlaneMultigraph& g, int m);
// Two vertices joined by m >= 2 parallel edges?
bool is_bond_graph(const PlaneMultigraph& g, int m);

// ---- output ----------------------------------------------------------------

std::string to_dot(const PlaneMultigraph& g, const std::string& name = "g",
                   const std::vector<std::string>& vertex_labels = {},
                   const std::vector<std::string>& edge_labels = {});

} // namespace leadsto
