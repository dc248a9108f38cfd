#include "leadsto/tait.hpp"

#include "leadsto/codes.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace leadsto {

Checkerboard checkerboard(const Projection& p) {
    const PlaneMultigraph& g = p.graph;
    if (g.vertex_count() == 0)
        throw std::invalid_argument("checkerboard: need at least one crossing");
    const int nf = g.face_count();
    Checkerboard cb;
    cb.face_color.assign(nf, -1);
    cb.face_color[0] = 0; // the face containing dart 0 is white
    std::queue<int> q;
    q.push(0);
    std::vector<std::vector<int>> nbr(nf);
    for (int a = 0; a < g.edge_count(); ++a) {
        const int f1 = g.face_of_dart(2 * a), f2 = g.face_of_dart(2 * a + 1);
        if (f1 == f2)
            throw std::logic_error("checkerboard: arc with the same face on both sides");
        nbr[f1].push_back(f2);
        nbr[f2].push_back(f1);
    }
    while (!q.empty()) {
        const int f = q.front();
        q.pop();
        for (int h : nbr[f]) {
            if (cb.face_color[h] == -1) {
                cb.face_color[h] = 1 - cb.face_color[f];
                q.push(h);
            } else if (cb.face_color[h] == cb.face_color[f]) {
                throw std::logic_error("checkerboard: faces are not two-colourable");
            }
        }
    }
    for (int c : cb.face_color)
        if (c == -1) throw std::logic_error("checkerboard: projection is disconnected");
    return cb;
}

TaitGraphPair tait_graphs(const Projection& p) {
    const PlaneMultigraph& g = p.graph;
    const int n = g.vertex_count();
    Checkerboard cb = checkerboard(p);
    const auto& faces = g.faces();
    const int nf = static_cast<int>(faces.size());

    TaitGraphPair t;
    t.face_color = cb.face_color;
    t.vertex_of_face.assign(nf, -1);
    int nwhite = 0, ngray = 0;
    for (int f = 0; f < nf; ++f)
        t.vertex_of_face[f] = cb.face_color[f] == 0 ? nwhite++ : ngray++;

    // Position of each projection dart in its vertex's rotation (== its slot).
    std::vector<int> slot_of(g.dart_count(), -1);
    for (int v = 0; v < n; ++v) {
        const auto& rot = g.rotation(v);
        for (int j = 0; j < 4; ++j) slot_of[rot[j]] = j;
    }
    // Face at the corner of crossing c between slots k and k+1.
    auto corner_face = [&](int c, int k) {
        return g.face_of_dart(g.rotation(c)[(k + 1) % 4]);
    };
    // The white corners of crossing c are w0 and w0+2.
    std::vector<int> w0(n);
    for (int c = 0; c < n; ++c) {
        w0[c] = cb.face_color[corner_face(c, 0)] == 0 ? 0 : 1;
        if (cb.face_color[corner_face(c, (w0[c] + 2) % 4)] != 0)
            throw std::logic_error("tait_graphs: corner colours do not alternate");
    }

    // Edge c of each Tait graph joins the two same-coloured corner faces of
    // crossing c; dart 2c sits at corner w0[c] (white) / w0[c]+1 (gray).
    std::vector<std::pair<int, int>> wends(n), gends(n);
    for (int c = 0; c < n; ++c) {
        wends[c] = {t.vertex_of_face[corner_face(c, w0[c])],
                    t.vertex_of_face[corner_face(c, (w0[c] + 2) % 4)]};
        gends[c] = {t.vertex_of_face[corner_face(c, (w0[c] + 1) % 4)],
                    t.vertex_of_face[corner_face(c, (w0[c] + 3) % 4)]};
    }
    // Rotation of the Tait vertex of face f: walk f's boundary; the walk
    // step departing along dart y passes the corner of vertex_of_dart(y)
    // between slots slot_of(y)-1 and slot_of(y), which carries one Tait dart.
    std::vector<std::vector<int>> wrot(nwhite), grot(ngray);
    for (int f = 0; f < nf; ++f) {
        const bool white = cb.face_color[f] == 0;
        auto& out = white ? wrot[t.vertex_of_face[f]] : grot[t.vertex_of_face[f]];
        for (int y : faces[f]) {
            const int c = g.vertex_of_dart(y);
            const int k = (slot_of[y] + 3) % 4; // corner between k and k+1
            const int rel = (k - w0[c] + 4) % 4;
            if (white) {
                if (rel != 0 && rel != 2)
                    throw std::logic_error("tait_graphs: corner/colour mismatch");
                out.push_back(rel == 0 ? 2 * c : 2 * c + 1);
            } else {
                if (rel != 1 && rel != 3)
                    throw std::logic_error("tait_graphs: corner/colour mismatch");
                out.push_back(rel == 1 ? 2 * c : 2 * c + 1);
            }
        }
    }
    t.white = PlaneMultigraph::from_rotation_system(std::move(wends), std::move(wrot));
    t.gray = PlaneMultigraph::from_rotation_system(std::move(gends), std::move(grot));
    return t;
}

namespace {

// Two distinct arcs with the same unordered pair of side faces admit a
// separating curve through those faces; first collision in arc order.
bool find_strength_witness(const Projection& p, StrengthWitness* w) {
    const PlaneMultigraph& g = p.graph;
    std::map<std::pair<int, int>, int> first_arc;
    for (int a = 0; a < g.edge_count(); ++a) {
        const int f1 = g.face_of_dart(2 * a), f2 = g.face_of_dart(2 * a + 1);
        const auto key = std::minmax(f1, f2);
        auto [it, fresh] = first_arc.try_emplace(key, a);
        if (!fresh) {
            if (w) {
                w->arc1 = it->second;
                w->arc2 = a;
                w->face1 = key.first;
                w->face2 = key.second;
            }
            return true;
        }
    }
    return false;
}

} // namespace

bool is_strong(const Projection& p, StrengthWitness* witness) {
    const int n = p.graph.vertex_count();
    if (n == 0) throw std::invalid_argument("is_strong: need at least one crossing");
    if (n == 1) return true;
    TaitGraphPair t = tait_graphs(p);
    const bool strong = is_biconnected(t.gray);
    if (!strong && witness != nullptr) {
        if (!find_strength_witness(p, witness))
            throw std::logic_error("is_strong: no witness for a non-strong projection");
    }
    return strong;
}

bool is_strong(const Diagram& d, StrengthWitness* witness) {
    return is_strong(projection(d), witness);
}

namespace {

void decompose_rec(const Diagram& d, std::vector<Diagram>& out) {
    Projection p = projection(d);
    StrengthWitness w;
    if (is_strong(p, &w)) {
        out.push_back(d);
        return;
    }
    const int n = d.crossing_count();
    // Crossing components once the two witness arcs are removed.
    std::vector<std::vector<int>> by_arc(d.arc_count);
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) by_arc[d.crossings[c].arcs[s]].push_back(c);
    std::vector<int> side(n, -1);
    int nsides = 0;
    for (int c0 = 0; c0 < n; ++c0) {
        if (side[c0] != -1) continue;
        const int id = nsides++;
        std::queue<int> q;
        side[c0] = id;
        q.push(c0);
        while (!q.empty()) {
            const int c = q.front();
            q.pop();
            for (int s = 0; s < 4; ++s) {
                const int a = d.crossings[c].arcs[s];
                if (a == w.arc1 || a == w.arc2) continue;
                for (int c2 : by_arc[a])
                    if (side[c2] == -1) {
                        side[c2] = id;
                        q.push(c2);
                    }
            }
        }
    }
    if (nsides != 2)
        throw std::logic_error("strong_decomposition: cut does not split in two");
    for (int a : {w.arc1, w.arc2})
        if (side[by_arc[a][0]] == side[by_arc[a][1]])
            throw std::logic_error("strong_decomposition: witness arc does not straddle the cut");

    for (int which = 0; which < 2; ++which) {
        Diagram nd;
        std::map<int, int> arc_id;
        int cut_arc = -1;
        for (int c = 0; c < n; ++c) {
            if (side[c] != which) continue;
            Crossing nc;
            for (int s = 0; s < 4; ++s) {
                const int a = d.crossings[c].arcs[s];
                if (a == w.arc1 || a == w.arc2) {
                    // Loose end: both loose ends of this side join into one
                    // fresh arc running along the separating curve.
                    if (cut_arc == -1) cut_arc = nd.arc_count++;
                    nc.arcs[s] = cut_arc;
                } else {
                    auto [it, fresh] = arc_id.try_emplace(a, nd.arc_count);
                    if (fresh) ++nd.arc_count;
                    nc.arcs[s] = it->second;
                }
            }
            nd.crossings.push_back(nc);
        }
        if (validate_diagram(nd) != DiagramDefect::None)
            throw std::logic_error("strong_decomposition: repaired part is invalid");
        decompose_rec(nd, out);
    }
}

} // namespace

std::vector<Diagram> strong_decomposition(const Diagram& d) {
    if (d.crossing_count() == 0)
        throw std::invalid_argument("strong_decomposition: need at least one crossing");
    if (validate_diagram(d) != DiagramDefect::None)
        throw std::invalid_argument("strong_decomposition: invalid diagram");
    std::vector<Diagram> out;
    decompose_rec(d, out);
    std::vector<std::pair<std::pair<int, std::string>, std::size_t>> keys;
    for (std::size_t i = 0; i < out.size(); ++i)
        keys.push_back({{out[i].crossing_count(), serialize_pd(out[i])}, i});
    std::sort(keys.begin(), keys.end());
    std::vector<Diagram> sorted;
    for (const auto& k : keys) sorted.push_back(out[k.second]);
    return sorted;
}

std::optional<int> is_torus_minimal_projection(const Projection& p) {
    const int n = p.graph.vertex_count();
    if (n < 2)
        throw std::invalid_argument("is_torus_minimal_projection: need at least two crossings");
    TaitGraphPair t = tait_graphs(p);
    if ((is_cycle_graph(t.white, n) && is_bond_graph(t.gray, n)) ||
        (is_cycle_graph(t.gray, n) && is_bond_graph(t.white, n)))
        return n;
    return std::nullopt;
}

} // namespace leadsto
