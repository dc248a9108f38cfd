#include "leadsto/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace leadsto {

namespace {

// Endpoint id for (crossing, slot).
inline int ep(int c, int s) { return 4 * c + s; }

// For each arc, its two endpoints in crossing-then-slot scan order.
// Returns an empty vector if some arc is not used exactly twice.
std::vector<std::array<int, 2>> arc_endpoints(const Diagram& d) {
    std::vector<std::array<int, 2>> occ(d.arc_count, {-1, -1});
    for (int c = 0; c < d.crossing_count(); ++c) {
        for (int s = 0; s < 4; ++s) {
            const int a = d.crossings[c].arcs[s];
            if (a < 0 || a >= d.arc_count) return {};
            if (occ[a][0] == -1) {
                occ[a][0] = ep(c, s);
            } else if (occ[a][1] == -1) {
                occ[a][1] = ep(c, s);
            } else {
                return {};
            }
        }
    }
    for (const auto& o : occ)
        if (o[1] == -1) return {};
    return occ;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Projection projection(const Diagram& d) {
    const auto occ = arc_endpoints(d);
    if (d.arc_count > 0 && occ.empty())
        throw std::invalid_argument("diagram arcs are not closed strands");
    std::vector<std::pair<int, int>> ends(d.arc_count);
    for (int a = 0; a < d.arc_count; ++a)
        ends[a] = {occ[a][0] / 4, occ[a][1] / 4};
    std::vector<std::vector<int>> rot(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c) {
        rot[c].reserve(4);
        for (int s = 0; s < 4; ++s) {
            const int a = d.crossings[c].arcs[s];
            rot[c].push_back(occ[a][0] == ep(c, s) ? 2 * a : 2 * a + 1);
        }
    }
    Projection p;
    p.graph = PlaneMultigraph::from_rotation_system(std::move(ends), std::move(rot));
    p.free_loops = d.free_loops;
    return p;
}

DiagramDefect validate_diagram(const Diagram& d) {
    if (d.arc_count != 2 * d.crossing_count()) return DiagramDefect::ArcUse;
    const auto occ = arc_endpoints(d);
    if (d.arc_count > 0 && occ.empty()) return DiagramDefect::ArcUse;
    if (d.crossing_count() == 0)
        return d.free_loops == 1 ? DiagramDefect::None : DiagramDefect::Disconnected;
    const auto p = projection(d);
    if (!p.graph.is_planar()) return DiagramDefect::NonPlanar;
    if (!p.graph.is_connected() || d.free_loops != 0)
        return DiagramDefect::Disconnected;
    return DiagramDefect::None;
}

std::string crossing_state_name(CrossingState s) {
    switch (s) {
    case CrossingState::Keep: return "keep";
    case CrossingState::Exchange: return "exchange";
    case CrossingState::SmoothA: return "smooth-a";
    case CrossingState::SmoothB: return "smooth-b";
    }
    return "?";
}

Diagram apply_assignment(const Diagram& d, const std::vector<CrossingState>& a) {
    if (static_cast<int>(a.size()) != d.crossing_count())
        throw std::invalid_argument("assignment size mismatch");
    const int n = d.crossing_count();
    if (n == 0) return d;
    const auto occ = arc_endpoints(d);
    if (occ.empty()) throw std::invalid_argument("diagram arcs are not closed strands");

    Dsu dsu(4 * n);
    for (const auto& o : occ) dsu.unite(o[0], o[1]);
    for (int c = 0; c < n; ++c) {
        if (a[c] == CrossingState::SmoothA) {
            dsu.unite(ep(c, 0), ep(c, 1));
            dsu.unite(ep(c, 2), ep(c, 3));
        } else if (a[c] == CrossingState::SmoothB) {
            dsu.unite(ep(c, 0), ep(c, 3));
            dsu.unite(ep(c, 1), ep(c, 2));
        }
    }

    Diagram out;
    out.free_loops = d.free_loops;
    std::vector<int> arc_of_root(4 * n, -1);
    for (int c = 0; c < n; ++c) {
        if (a[c] != CrossingState::Keep && a[c] != CrossingState::Exchange) continue;
        Crossing nc;
        for (int s = 0; s < 4; ++s) {
            const int old_slot = a[c] == CrossingState::Keep ? s : (s + 1) % 4;
            const int root = dsu.find(ep(c, old_slot));
            if (arc_of_root[root] == -1) arc_of_root[root] = out.arc_count++;
            nc.arcs[s] = arc_of_root[root];
        }
        out.crossings.push_back(nc);
    }
    // Strand cycles passing through no kept crossing close into free loops.
    std::vector<char> closed_root_seen(4 * n, 0);
    for (int e = 0; e < 4 * n; ++e) {
        const int root = dsu.find(e);
        if (arc_of_root[root] != -1 || closed_root_seen[root]) continue;
        closed_root_seen[root] = 1;
        ++out.free_loops;
    }
    return out;
}

Strands trace_strands(const Diagram& d) {
    const int n = d.crossing_count();
    Strands st;
    st.passages.assign(n, {});
    if (n > 0) {
        const auto occ = arc_endpoints(d);
        if (occ.empty())
            throw std::invalid_argument("diagram arcs are not closed strands");
        std::vector<char> visited(4 * n, 0);
        for (int start = 0; start < 4 * n; ++start) {
            if (visited[start]) continue;
            const int comp = st.component_count++;
            int pos = start; // endpoint where the strand enters a crossing
            do {
                const int c = pos / 4, s = pos % 4;
                visited[pos] = 1;
                st.passages[c][s % 2 == 0 ? 0 : 1] = {comp, s};
                const int out_slot = (s + 2) % 4;
                visited[ep(c, out_slot)] = 1;
                // follow the departing arc to its far endpoint
                const int arc = d.crossings[c].arcs[out_slot];
                pos = occ[arc][0] == ep(c, out_slot) ? occ[arc][1] : occ[arc][0];
            } while (pos != start);
        }
    }
    st.component_count += d.free_loops;
    return st;
}

int component_count(const Diagram& d) { return trace_strands(d).component_count; }

int self_writhe(const Diagram& d) {
    const Strands st = trace_strands(d);
    int w = 0;
    for (const auto& p : st.passages) {
        if (p[0].component != p[1].component) continue;
        const int s = p[0].in_slot, t = p[1].in_slot;
        w += (t - s + 4) % 4 == 3 ? 1 : -1;
    }
    return w;
}

Diagram medial_diagram(const PlaneMultigraph& g) {
    if (g.edge_count() == 0 || !g.is_connected())
        throw std::invalid_argument("medial requires a connected graph with edges");
    // Crossing e sits on edge e; its four arcs are corners of g, identified
    // with darts (corner d lies between d and rot_next(d)).  Counterclockwise
    // around the crossing: the corner ahead of dart 2e, the one behind it,
    // then the same at the far end — which puts the strand parallel to the
    // edge on the under diagonal.
    Diagram d;
    d.arc_count = g.dart_count();
    d.crossings.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const int d0 = 2 * e, d1 = 2 * e + 1;
        d.crossings[e].arcs = {d0, g.rot_prev(d0), d1, g.rot_prev(d1)};
    }
    return d;
}

Diagram build_torus2_diagram(int m) {
    if (m < 2) throw std::invalid_argument("torus link parameter must be >= 2");
    PlaneMultigraph g(m);
    for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
    if (!g.is_planar()) throw std::logic_error("cycle embedding failed Euler check");
    return medial_diagram(g);
}

Diagram build_twist_diagram(int m) {
    if (m < 3) throw std::invalid_argument("twist knot parameter must be >= 3");
    // (m-1)-cycle with the edge (0,1) doubled, embedded so the two parallel
    // edges bound a bigon face.
    const int k = m - 1; // cycle length
    std::vector<std::pair<int, int>> ends;
    for (int i = 0; i < k; ++i) ends.emplace_back(i, (i + 1) % k);
    ends.emplace_back(0, 1); // edge k, parallel to edge 0
    std::vector<std::vector<int>> rot(k);
    if (k == 2) {
        rot[0] = {0, 2 * k, 3};
        rot[1] = {2, 2 * k + 1, 1};
    } else {
        rot[0] = {0, 2 * k, 2 * k - 1};
        rot[1] = {2, 2 * k + 1, 1};
        for (int i = 2; i < k; ++i) rot[i] = {2 * i, 2 * i - 1};
    }
    auto g = PlaneMultigraph::from_rotation_system(std::move(ends), std::move(rot));
    if (!g.is_planar())
        throw std::logic_error("doubled-cycle embedding failed Euler check");
    return medial_diagram(g);
}

} // namespace leadsto
