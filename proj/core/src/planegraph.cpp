#include "leadsto/planegraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace leadsto {

PlaneMultigraph::PlaneMultigraph(int vertex_count) : rot_(vertex_count) {}

PlaneMultigraph PlaneMultigraph::from_rotation_system(
    std::vector<std::pair<int, int>> ends, std::vector<std::vector<int>> rotations) {
    PlaneMultigraph g;
    const int n = static_cast<int>(rotations.size());
    const int m = static_cast<int>(ends.size());
    g.ends_ = std::move(ends);
    g.rot_ = std::move(rotations);
    g.dart_vertex_.assign(2 * m, -1);
    for (const auto& [u, v] : g.ends_)
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
    std::vector<char> seen(2 * m, 0);
    for (int v = 0; v < n; ++v) {
        for (int d : g.rot_[v]) {
            if (d < 0 || d >= 2 * m || seen[d])
                throw std::invalid_argument("bad dart in rotation");
            seen[d] = 1;
            const auto& e = g.ends_[edge_of(d)];
            if ((d & 1 ? e.second : e.first) != v)
                throw std::invalid_argument("dart listed at wrong vertex");
            g.dart_vertex_[d] = v;
        }
    }
    for (int d = 0; d < 2 * m; ++d)
        if (!seen[d]) throw std::invalid_argument("dart missing from rotations");
    return g;
}

int PlaneMultigraph::add_vertex() {
    rot_.emplace_back();
    invalidate_caches();
    return vertex_count() - 1;
}

int PlaneMultigraph::add_edge(int u, int v) {
    const int e = edge_count();
    ends_.emplace_back(u, v);
    rot_[u].push_back(2 * e);
    rot_[v].push_back(2 * e + 1);
    dart_vertex_.push_back(u);
    dart_vertex_.push_back(v);
    invalidate_caches();
    return e;
}

int PlaneMultigraph::insert_edge_at(int u, int pos_u, int v, int pos_v) {
    const int e = edge_count();
    ends_.emplace_back(u, v);
    dart_vertex_.push_back(u);
    dart_vertex_.push_back(v);
    if (u != v) {
        rot_[u].insert(rot_[u].begin() + pos_u, 2 * e);
        rot_[v].insert(rot_[v].begin() + pos_v, 2 * e + 1);
    } else {
        if (pos_u == pos_v)
            throw std::invalid_argument("loop insertion positions must differ");
        // Insert the later position first so the earlier index stays valid.
        if (pos_u < pos_v) {
            rot_[u].insert(rot_[u].begin() + pos_v, 2 * e + 1);
            rot_[u].insert(rot_[u].begin() + pos_u, 2 * e);
        } else {
            rot_[u].insert(rot_[u].begin() + pos_u, 2 * e);
            rot_[u].insert(rot_[u].begin() + pos_v, 2 * e + 1);
        }
    }
    invalidate_caches();
    return e;
}

void PlaneMultigraph::invalidate_caches() {
    faces_valid_ = false;
    faces_cache_.clear();
    face_of_dart_cache_.clear();
}

int PlaneMultigraph::rot_next(int d) const {
    const auto& r = rot_[dart_vertex_[d]];
    const int k = static_cast<int>(r.size());
    for (int i = 0; i < k; ++i)
        if (r[i] == d) return r[(i + 1) % k];
    throw std::logic_error("dart not present in its rotation");
}

int PlaneMultigraph::rot_prev(int d) const {
    const auto& r = rot_[dart_vertex_[d]];
    const int k = static_cast<int>(r.size());
    for (int i = 0; i < k; ++i)
        if (r[i] == d) return r[(i + k - 1) % k];
    throw std::logic_error("dart not present in its rotation");
}

const std::vector<std::vector<int>>& PlaneMultigraph::faces() const {
    if (!faces_valid_) {
        faces_cache_.clear();
        face_of_dart_cache_.assign(dart_count(), -1);
        for (int d = 0; d < dart_count(); ++d) {
            if (face_of_dart_cache_[d] != -1) continue;
            const int id = static_cast<int>(faces_cache_.size());
            std::vector<int> walk;
            int x = d;
            do {
                face_of_dart_cache_[x] = id;
                walk.push_back(x);
                x = face_next(x);
            } while (x != d);
            faces_cache_.push_back(std::move(walk));
        }
        faces_valid_ = true;
    }
    return faces_cache_;
}

int PlaneMultigraph::face_of_dart(int d) const {
    faces();
    return face_of_dart_cache_[d];
}

std::vector<int> PlaneMultigraph::vertex_components() const {
    std::vector<int> comp(vertex_count(), -1);
    int next = 0;
    for (int s = 0; s < vertex_count(); ++s) {
        if (comp[s] != -1) continue;
        const int id = next++;
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int d : rot_[v]) {
                const int w = dart_vertex_[mate(d)];
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return comp;
}

int PlaneMultigraph::component_count() const {
    const auto comp = vertex_components();
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

bool PlaneMultigraph::is_connected() const { return component_count() <= 1; }

bool PlaneMultigraph::is_planar() const {
    const auto comp = vertex_components();
    const int nc = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    std::vector<int> vcnt(nc, 0), ecnt(nc, 0), fcnt(nc, 0);
    for (int v = 0; v < vertex_count(); ++v) vcnt[comp[v]]++;
    for (int e = 0; e < edge_count(); ++e) ecnt[comp[ends_[e].first]]++;
    for (const auto& walk : faces()) fcnt[comp[dart_vertex_[walk[0]]]]++;
    for (int c = 0; c < nc; ++c) {
        if (ecnt[c] == 0) continue; // isolated vertex
        if (vcnt[c] - ecnt[c] + fcnt[c] != 2) return false;
    }
    return true;
}

PlaneMultigraph PlaneMultigraph::dual() const {
    if (!is_connected() || edge_count() == 0)
        throw std::invalid_argument("dual requires a connected graph with edges");
    const auto& fs = faces();
    PlaneMultigraph d(static_cast<int>(fs.size()));
    d.ends_.resize(edge_count());
    d.dart_vertex_.assign(dart_count(), -1);
    for (int e = 0; e < edge_count(); ++e)
        d.ends_[e] = {face_of_dart(2 * e), face_of_dart(2 * e + 1)};
    for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
        // The face walk runs clockwise around the face, so the counter-
        // clockwise rotation of the dual vertex is the reversed walk.
        d.rot_[f].assign(fs[f].rbegin(), fs[f].rend());
        for (int x : fs[f]) d.dart_vertex_[x] = f;
    }
    return d;
}

// ---- blocks ----------------------------------------------------------------

namespace {

struct BlockDfs {
    const PlaneMultigraph& g;
    std::vector<int> disc, low;
    std::vector<int> estack; // stack of edge ids
    std::vector<Block> out;
    int timer = 0;

    explicit BlockDfs(const PlaneMultigraph& gg)
        : g(gg), disc(gg.vertex_count(), -1), low(gg.vertex_count(), 0) {}

    void emit_from(int top_edge) {
        Block b;
        while (true) {
            const int e = estack.back();
            estack.pop_back();
            b.edges.push_back(e);
            if (e == top_edge) break;
        }
        std::sort(b.edges.begin(), b.edges.end());
        for (int e : b.edges) {
            auto [u, v] = g.ends(e);
            b.vertices.push_back(u);
            b.vertices.push_back(v);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()),
                         b.vertices.end());
        b.is_bridge = b.edges.size() == 1 && !g.is_loop(b.edges[0]);
        out.push_back(std::move(b));
    }

    void run(int root) {
        struct Frame {
            int v;
            int parent_edge;
            size_t idx = 0;
            int pending_child = -1;
            int pending_edge = -1;
        };
        std::vector<Frame> st;
        disc[root] = low[root] = timer++;
        st.push_back({root, -1});
        std::vector<char> edge_seen(g.edge_count(), 0);
        while (!st.empty()) {
            Frame& f = st.back();
            const int v = f.v;
            if (f.pending_child != -1) {
                // returned from child
                const int c = f.pending_child;
                low[v] = std::min(low[v], low[c]);
                if (low[c] >= disc[v]) emit_from(f.pending_edge);
                f.pending_child = -1;
                f.pending_edge = -1;
            }
            const auto& r = g.rotation(v);
            bool descended = false;
            while (f.idx < r.size()) {
                const int d = r[f.idx++];
                const int e = PlaneMultigraph::edge_of(d);
                if (e == f.parent_edge) continue;
                const int w = g.vertex_of_dart(PlaneMultigraph::mate(d));
                if (w == v) { // loop: its own degenerate block
                    if (!edge_seen[e]) {
                        edge_seen[e] = 1;
                        Block b;
                        b.edges = {e};
                        b.vertices = {v};
                        b.is_loop = true;
                        out.push_back(std::move(b));
                    }
                    continue;
                }
                if (edge_seen[e]) continue;
                edge_seen[e] = 1;
                if (disc[w] == -1) {
                    estack.push_back(e);
                    disc[w] = low[w] = timer++;
                    f.pending_child = w;
                    f.pending_edge = e;
                    st.push_back({w, e});
                    descended = true;
                    break;
                } else if (disc[w] < disc[v]) {
                    estack.push_back(e);
                    low[v] = std::min(low[v], disc[w]);
                }
            }
            if (!descended && f.idx >= r.size() && f.pending_child == -1)
                st.pop_back();
        }
    }
};

} // namespace

std::vector<Block> blocks(const PlaneMultigraph& g) {
    BlockDfs dfs(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dfs.disc[v] == -1 && g.degree(v) > 0) dfs.run(v);
    std::sort(dfs.out.begin(), dfs.out.end(),
              [](const Block& a, const Block& b) { return a.edges[0] < b.edges[0]; });
    return dfs.out;
}

std::vector<int> cut_vertices(const PlaneMultigraph& g) {
    // Direct definition: v is a cut vertex iff deleting v (and its edges)
    // increases the number of components among the remaining vertices.
    std::vector<int> result;
    const int n = g.vertex_count();
    if (n <= 2) return result;
    const auto comp = g.vertex_components();
    const int before = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
    for (int v = 0; v < n; ++v) {
        std::vector<char> seen(n, 0);
        seen[v] = 1;
        int parts = 0;
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            ++parts;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                for (int d : g.rotation(x)) {
                    const int w = g.vertex_of_dart(PlaneMultigraph::mate(d));
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
        }
        if (parts > before) result.push_back(v);
    }
    return result;
}

bool is_biconnected(const PlaneMultigraph& g) {
    if (g.vertex_count() < 2 || !g.is_connected()) return false;
    const auto bs = blocks(g);
    return bs.size() == 1 && !bs[0].degenerate();
}

// ---- isomorphism / canonical codes ----------------------------------------

namespace {

constexpr uint16_t kSep = 0xfffe;

// Deterministic traversal code from a given start dart and orientation.
void map_code_from(const PlaneMultigraph& g, int start, bool reflected,
                   std::vector<uint16_t>& code, std::vector<int>& label,
                   std::vector<int>& order) {
    const int nd = g.dart_count();
    code.clear();
    label.assign(nd, -1);
    order.clear();
    label[start] = 0;
    order.push_back(start);
    int next = 1;
    for (size_t i = 0; i < order.size(); ++i) {
        const int d = order[i];
        int x = reflected ? g.rot_prev(d) : g.rot_next(d);
        while (x != d) {
            if (label[x] == -1) {
                label[x] = next++;
                order.push_back(x);
            }
            code.push_back(static_cast<uint16_t>(label[x]));
            x = reflected ? g.rot_prev(x) : g.rot_next(x);
        }
        code.push_back(kSep);
        const int m = PlaneMultigraph::mate(d);
        if (label[m] == -1) {
            label[m] = next++;
            order.push_back(m);
        }
        code.push_back(static_cast<uint16_t>(label[m]));
    }
}

} // namespace

std::vector<uint16_t> canonical_map_code(const PlaneMultigraph& g,
                                         bool allow_reflection) {
    if (!g.is_connected())
        throw std::invalid_argument("canonical_map_code requires a connected map");
    if (g.edge_count() == 0) return {};
    std::vector<uint16_t> best, cur;
    std::vector<int> label, order;
    for (int o = 0; o < (allow_reflection ? 2 : 1); ++o) {
        for (int s = 0; s < g.dart_count(); ++s) {
            map_code_from(g, s, o == 1, cur, label, order);
            if (best.empty() || cur < best) best = cur;
        }
    }
    return best;
}

bool plane_isomorphic(const PlaneMultigraph& a, const PlaneMultigraph& b,
                      bool allow_reflection) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    if (a.edge_count() == 0) return true; // equal vertex counts, no structure
    auto degs = [](const PlaneMultigraph& g) {
        std::vector<int> d(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;
    return canonical_map_code(a, allow_reflection) ==
           canonical_map_code(b, allow_reflection);
}

// ---- shape recognizers -----------------------------------------------------

bool is_cycle_graph(const PlaneMultigraph& g, int m) {
    if (m < 2) return false;
    if (g.vertex_count() != m || g.edge_count() != m) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) return false;
    return g.is_connected();
}

bool is_bond_graph(const PlaneMultigraph& g, int m) {
    if (m < 2) return false;
    if (g.vertex_count() != 2 || g.edge_count() != m) return false;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.is_loop(e)) return false;
    return true;
}

// ---- output ----------------------------------------------------------------

std::string to_dot(const PlaneMultigraph& g, const std::string& name,
                   const std::vector<std::string>& vertex_labels,
                   const std::vector<std::string>& edge_labels) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  v" << v;
        if (v < static_cast<int>(vertex_labels.size()))
            os << " [label=\"" << vertex_labels[v] << "\"]";
        os << ";\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.ends(e);
        os << "  v" << u << " -- v" << v;
        if (e < static_cast<int>(edge_labels.size()))
            os << " [label=\"" << edge_labels[e] << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace leadsto
