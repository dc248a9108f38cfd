#include "leadsto/minors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace leadsto {

int target_vertex_count(MinorTarget t, int m) {
    switch (t) {
    case MinorTarget::Cycle: return m;
    case MinorTarget::Bond: return 2;
    case MinorTarget::CyclePlus: return m;
    case MinorTarget::BondPlus: return 3;
    }
    return 0;
}

std::vector<std::pair<int, int>> target_edge_list(MinorTarget t, int m) {
    if (m < 2) throw std::invalid_argument("target parameter must be >= 2");
    std::vector<std::pair<int, int>> es;
    switch (t) {
    case MinorTarget::Cycle:
        for (int i = 0; i < m; ++i) es.emplace_back(i, (i + 1) % m);
        break;
    case MinorTarget::Bond:
        for (int i = 0; i < m; ++i) es.emplace_back(0, 1);
        break;
    case MinorTarget::CyclePlus:
        for (int i = 0; i < m; ++i) es.emplace_back(i, (i + 1) % m);
        es.emplace_back(0, 1);
        break;
    case MinorTarget::BondPlus:
        for (int i = 0; i < m - 1; ++i) es.emplace_back(0, 1);
        es.emplace_back(0, 2);
        es.emplace_back(2, 1);
        break;
    }
    return es;
}

std::string target_name(MinorTarget t, int m) {
    switch (t) {
    case MinorTarget::Cycle: return "C" + std::to_string(m);
    case MinorTarget::Bond: return "B" + std::to_string(m);
    case MinorTarget::CyclePlus: return "C" + std::to_string(m) + "+";
    case MinorTarget::BondPlus: return "B" + std::to_string(m) + "+";
    }
    return "?";
}

PlaneMultigraph target_plane_graph(MinorTarget t, int m) {
    if (m < 2) throw std::invalid_argument("target parameter must be >= 2");
    PlaneMultigraph g;
    switch (t) {
    case MinorTarget::Cycle: {
        g = PlaneMultigraph(m);
        for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
        break;
    }
    case MinorTarget::Bond: {
        std::vector<std::pair<int, int>> ends(m, {0, 1});
        std::vector<std::vector<int>> rot(2);
        for (int i = 0; i < m; ++i) rot[0].push_back(2 * i);
        for (int i = m - 1; i >= 0; --i) rot[1].push_back(2 * i + 1);
        g = PlaneMultigraph::from_rotation_system(std::move(ends), std::move(rot));
        break;
    }
    case MinorTarget::CyclePlus: {
        auto ends = target_edge_list(t, m);
        std::vector<std::vector<int>> rot(m);
        rot[0] = {0, 2 * m, 2 * m - 1};  // cycle out, chord, cycle in
        rot[1] = {2, 2 * m + 1, 1};
        for (int i = 2; i < m; ++i) rot[i] = {2 * i, 2 * i - 1};
        g = PlaneMultigraph::from_rotation_system(std::move(ends), std::move(rot));
        break;
    }
    case MinorTarget::BondPlus: {
        auto ends = target_edge_list(t, m);
        std::vector<std::vector<int>> rot(3);
        for (int i = 0; i < m - 1; ++i) rot[0].push_back(2 * i);
        rot[0].push_back(2 * (m - 1)); // the subdivided edge sits last at 0
        rot[2] = {2 * m - 1, 2 * m};
        rot[1].push_back(2 * m + 1);
        for (int i = m - 2; i >= 0; --i) rot[1].push_back(2 * i + 1);
        g = PlaneMultigraph::from_rotation_system(std::move(ends), std::move(rot));
        break;
    }
    }
    if (!g.is_planar())
        throw std::logic_error("target_plane_graph: embedding is not planar");
    return g;
}

std::string recognize_target_shape(const PlaneMultigraph& g) {
    const int v = g.vertex_count(), e = g.edge_count();
    if (e < 2 || !g.is_connected()) return "";
    std::vector<std::pair<MinorTarget, int>> candidates;
    if (v == e) candidates.push_back({MinorTarget::Cycle, e});
    if (v == 2) candidates.push_back({MinorTarget::Bond, e});
    if (v == e - 1) candidates.push_back({MinorTarget::CyclePlus, e - 1});
    if (v == 3 && e >= 3) candidates.push_back({MinorTarget::BondPlus, e - 1});
    for (const auto& [t, m] : candidates)
        if (m >= 2 && plane_isomorphic(g, target_plane_graph(t, m)))
            return target_name(t, m);
    return "";
}

bool verify_minor_witness(const PlaneMultigraph& g, const MinorWitness& w,
                          std::string* error) {
    auto fail = [&](const std::string& why) {
        if (error) *error = why;
        return false;
    };
    if (w.m < 2) return fail("target parameter out of range");
    const int tv = target_vertex_count(w.target, w.m);
    const auto tes = target_edge_list(w.target, w.m);
    if (static_cast<int>(w.branch_sets.size()) != tv)
        return fail("wrong number of branch sets");
    if (w.edge_map.size() != tes.size()) return fail("wrong edge map size");

    std::vector<int> owner(g.vertex_count(), -1);
    for (int b = 0; b < tv; ++b) {
        if (w.branch_sets[b].empty()) return fail("empty branch set");
        for (int v : w.branch_sets[b]) {
            if (v < 0 || v >= g.vertex_count()) return fail("vertex out of range");
            if (owner[v] != -1) return fail("branch sets not disjoint");
            owner[v] = b;
        }
    }
    // connectivity of each branch set within g
    for (int b = 0; b < tv; ++b) {
        const auto& set = w.branch_sets[b];
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> stack{set[0]};
        seen[set[0]] = 1;
        int reached = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++reached;
            for (int d : g.rotation(v)) {
                const int u = g.vertex_of_dart(PlaneMultigraph::mate(d));
                if (owner[u] == b && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        if (reached != static_cast<int>(set.size()))
            return fail("branch set not connected");
    }
    std::vector<char> used_edge(g.edge_count(), 0);
    for (size_t i = 0; i < tes.size(); ++i) {
        const int e = w.edge_map[i];
        if (e < 0 || e >= g.edge_count()) return fail("edge out of range");
        if (used_edge[e]) return fail("edge map not injective");
        used_edge[e] = 1;
        auto [x, y] = g.ends(e);
        const int a = owner[x], b = owner[y];
        const auto [ta, tb] = tes[i];
        if (!((a == ta && b == tb) || (a == tb && b == ta)))
            return fail("host edge joins wrong branch sets");
    }
    return true;
}

// ---- cycle enumeration -----------------------------------------------------

namespace {

// Enumerates every simple cycle (possibly twice, once per direction); the
// callback may return false to stop.  Cycles are anchored at their smallest
// vertex.
void enumerate_cycles(const PlaneMultigraph& g,
                      const std::function<bool(const std::vector<int>&,
                                               const std::vector<int>&)>& fn) {
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (neighbor, edge)
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.ends(e);
        adj[u].emplace_back(v, e);
        if (u != v) adj[v].emplace_back(u, e);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<char> on_path(n, 0);
    std::vector<char> edge_used(g.edge_count(), 0);
    std::vector<int> pverts, pedges;
    bool stop = false;

    std::function<void(int, int)> dfs = [&](int anchor, int x) {
        if (stop) return;
        for (const auto& [w, e] : adj[x]) {
            if (stop) return;
            if (edge_used[e]) continue;
            if (w == anchor) {
                if (x == anchor && !g.is_loop(e)) continue; // needs two darts
                pedges.push_back(e);
                if (!fn(pverts, pedges)) stop = true;
                pedges.pop_back();
                continue;
            }
            if (w < anchor || on_path[w]) continue;
            on_path[w] = 1;
            edge_used[e] = 1;
            pverts.push_back(w);
            pedges.push_back(e);
            dfs(anchor, w);
            pedges.pop_back();
            pverts.pop_back();
            edge_used[e] = 0;
            on_path[w] = 0;
        }
    };

    for (int a = 0; a < n && !stop; ++a) {
        on_path[a] = 1;
        pverts.assign(1, a);
        pedges.clear();
        dfs(a, a);
        on_path[a] = 0;
    }
}

std::vector<int> cycle_canonical_form(const std::vector<int>& verts,
                                      const std::vector<int>& edges) {
    const int L = static_cast<int>(verts.size());
    std::vector<int> best, cur;
    cur.reserve(2 * L);
    for (int dir = 0; dir < 2; ++dir) {
        for (int s = 0; s < L; ++s) {
            cur.clear();
            for (int i = 0; i < L; ++i) {
                if (dir == 0) {
                    cur.push_back(verts[(s + i) % L]);
                    cur.push_back(edges[(s + i) % L]);
                } else {
                    cur.push_back(verts[(s - i % L + L + L) % L]);
                    cur.push_back(edges[(s - i % L - 1 + 2 * L) % L]);
                }
            }
            if (best.empty() || cur < best) best = cur;
        }
    }
    return best;
}

} // namespace

int circumference(const PlaneMultigraph& g, CycleWitness* witness) {
    int best_len = 0;
    std::vector<int> best_form;
    enumerate_cycles(g, [&](const std::vector<int>& vs, const std::vector<int>& es) {
        const int len = static_cast<int>(es.size());
        if (len > best_len) {
            best_len = len;
            best_form = witness ? cycle_canonical_form(vs, es) : std::vector<int>{};
        } else if (witness && len == best_len && best_len > 0) {
            auto form = cycle_canonical_form(vs, es);
            if (form < best_form) best_form = std::move(form);
        }
        return true;
    });
    if (witness) {
        witness->vertices.clear();
        witness->edges.clear();
        for (int i = 0; i < best_len; ++i) {
            witness->vertices.push_back(best_form[2 * i]);
            witness->edges.push_back(best_form[2 * i + 1]);
        }
    }
    return best_len;
}

// ---- cycle minor -----------------------------------------------------------

std::optional<MinorWitness> find_cycle_minor(const PlaneMultigraph& g, int m) {
    if (m < 2) throw std::invalid_argument("find_cycle_minor requires m >= 2");
    CycleWitness cyc;
    const int L = circumference(g, &cyc);
    if (L < m) return std::nullopt;

    MinorWitness w;
    w.target = MinorTarget::Cycle;
    w.m = m;
    // Split the cycle into m consecutive segments; the first L % m segments
    // take one extra vertex.
    const int base = L / m, extra = L % m;
    std::vector<int> seg_last; // index into cyc of the last vertex per segment
    int pos = 0;
    for (int j = 0; j < m; ++j) {
        const int size = base + (j < extra ? 1 : 0);
        std::vector<int> set(cyc.vertices.begin() + pos,
                             cyc.vertices.begin() + pos + size);
        std::sort(set.begin(), set.end());
        w.branch_sets.push_back(std::move(set));
        pos += size;
        seg_last.push_back(pos - 1);
    }
    for (int j = 0; j < m; ++j) w.edge_map.push_back(cyc.edges[seg_last[j]]);
    std::string err;
    if (!verify_minor_witness(g, w, &err))
        throw std::logic_error("cycle minor witness failed self-check: " + err);
    return w;
}

// ---- bond minor ------------------------------------------------------------

std::optional<MinorWitness> find_bond_minor(const PlaneMultigraph& g, int m) {
    if (m < 2) throw std::invalid_argument("find_bond_minor requires m >= 2");
    if (!g.is_connected())
        throw std::invalid_argument("find_bond_minor requires a connected graph");
    if (g.edge_count() == 0) return std::nullopt;
    CycleWitness cyc;
    const int L = circumference(g.dual(), &cyc);
    if (L < m) return std::nullopt;

    // The dual cycle's edges form a minimal edge cut of g; both sides are
    // connected.
    std::vector<char> in_cut(g.edge_count(), 0);
    for (int e : cyc.edges) in_cut[e] = 1;
    std::vector<int> side(g.vertex_count(), -1);
    int nsides = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[s] != -1) continue;
        const int id = nsides++;
        std::vector<int> stack{s};
        side[s] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int d : g.rotation(v)) {
                if (in_cut[PlaneMultigraph::edge_of(d)]) continue;
                const int u = g.vertex_of_dart(PlaneMultigraph::mate(d));
                if (side[u] == -1) {
                    side[u] = id;
                    stack.push_back(u);
                }
            }
        }
    }
    if (nsides != 2)
        throw std::logic_error("dual cycle did not induce a two-sided cut");

    MinorWitness w;
    w.target = MinorTarget::Bond;
    w.m = m;
    w.branch_sets.assign(2, {});
    for (int v = 0; v < g.vertex_count(); ++v)
        w.branch_sets[side[v]].push_back(v); // side 0 holds vertex 0
    std::vector<int> cut_edges(cyc.edges);
    std::sort(cut_edges.begin(), cut_edges.end());
    w.edge_map.assign(cut_edges.begin(), cut_edges.begin() + m);
    std::string err;
    if (!verify_minor_witness(g, w, &err))
        throw std::logic_error("bond minor witness failed self-check: " + err);
    return w;
}

// ---- theta minor -----------------------------------------------------------

namespace {

// Builds the CyclePlus(c+1) witness from a theta whose branches are X, Y, Z
// (Z the long one, length >= c), each path running u -> v.
MinorWitness theta_witness(const PlaneMultigraph& g, int c, int u, int v,
                           const std::vector<int>& xv, const std::vector<int>& xe,
                           const std::vector<int>& yv, const std::vector<int>& ye,
                           const std::vector<int>& zv, const std::vector<int>& ze) {
    const int k = c + 1;
    MinorWitness w;
    w.target = MinorTarget::CyclePlus;
    w.m = k;
    w.branch_sets.assign(k, {});
    w.edge_map.assign(k + 1, -1);

    auto& b0 = w.branch_sets[0]; // holds u
    auto& b1 = w.branch_sets[1]; // holds v
    b0.push_back(u);
    b1.push_back(v);
    for (size_t i = 1; i + 1 < xv.size(); ++i) b0.push_back(xv[i]);
    for (size_t i = 1; i + 1 < yv.size(); ++i) b1.push_back(yv[i]);
    w.edge_map[0] = xe.back();  // target edge (0,1)
    w.edge_map[k] = ye.front(); // parallel target edge (0,1)

    const int lz = static_cast<int>(ze.size());
    if (c == 1) {
        for (size_t i = 1; i + 1 < zv.size(); ++i) b1.push_back(zv[i]);
        w.edge_map[1] = ze.front(); // target edge (1,0)
    } else {
        // Target path 1 -(e1)- 2 - ... - (k-1) -(e_{k-1})- 0; orient Z from v
        // to u and split its lz-1 interior vertices into c-1 segments.
        std::vector<int> rv(zv.rbegin(), zv.rend());
        std::vector<int> re(ze.rbegin(), ze.rend());
        const int interior = lz - 1, segs = c - 1;
        const int base = interior / segs, extra = interior % segs;
        int pos = 1; // rv[0] == v
        for (int s = 0; s < segs; ++s) {
            const int size = base + (s < extra ? 1 : 0);
            auto& bs = w.branch_sets[2 + s];
            for (int i = 0; i < size; ++i) bs.push_back(rv[pos + i]);
            w.edge_map[1 + s] = re[pos - 1]; // edge entering this segment
            pos += size;
        }
        w.edge_map[k - 1] = re.back(); // edge from last segment to u
    }
    for (auto& set : w.branch_sets) std::sort(set.begin(), set.end());
    std::string err;
    if (!verify_minor_witness(g, w, &err))
        throw std::logic_error("theta minor witness failed self-check: " + err);
    return w;
}

} // namespace

std::optional<MinorWitness> find_theta_minor(const PlaneMultigraph& g, int c,
                                             ThetaSubgraph* theta) {
    if (c < 1) throw std::invalid_argument("find_theta_minor requires c >= 1");
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.ends(e);
        if (u == v) continue; // loops never contribute to a theta
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::optional<MinorWitness> found;
    std::vector<char> on_cycle(n, 0);
    std::vector<char> cyc_edge(g.edge_count(), 0);

    enumerate_cycles(g, [&](const std::vector<int>& cv, const std::vector<int>& ce) {
        const int L = static_cast<int>(ce.size());
        if (L < 2) return true; // a loop cannot be two theta branches
        for (int x : cv) on_cycle[x] = 1;
        for (int e : ce) cyc_edge[e] = 1;
        std::vector<int> pos_on_cycle(n, -1);
        for (int i = 0; i < L; ++i) pos_on_cycle[cv[i]] = i;

        // Enumerate C-paths from each cycle vertex.
        std::vector<char> on_path(n, 0);
        std::vector<int> qverts, qedges;
        std::function<bool(int, int)> grow = [&](int u, int x) -> bool {
            for (const auto& [w2, e] : adj[x]) {
                if (cyc_edge[e]) continue;
                if (std::find(qedges.begin(), qedges.end(), e) != qedges.end())
                    continue;
                if (on_cycle[w2]) {
                    if (w2 == u) continue;
                    const int q = static_cast<int>(qedges.size()) + 1;
                    const int s =
                        (pos_on_cycle[w2] - pos_on_cycle[u] + L) % L;
                    if (std::max(q, std::max(s, L - s)) < c) continue;
                    // Assemble the three u..w2 paths.
                    std::vector<int> p1v, p1e, p2v, p2e, qv, qe;
                    for (int i = 0; i <= s; ++i) {
                        p1v.push_back(cv[(pos_on_cycle[u] + i) % L]);
                        if (i < s) p1e.push_back(ce[(pos_on_cycle[u] + i) % L]);
                    }
                    for (int i = 0; i <= L - s; ++i) {
                        p2v.push_back(cv[(pos_on_cycle[u] - i + L + L) % L]);
                        if (i < L - s)
                            p2e.push_back(ce[(pos_on_cycle[u] - i - 1 + 2 * L) % L]);
                    }
                    qv = qverts;
                    qv.push_back(w2);
                    qe = qedges;
                    qe.push_back(e);
                    // p1, p2 run u->w2; q runs u->w2.
                    struct Branch {
                        const std::vector<int>*v, *e;
                    };
                    std::array<Branch, 3> br = {
                        Branch{&p1v, &p1e}, Branch{&p2v, &p2e}, Branch{&qv, &qe}};
                    int zi = -1;
                    for (int i = 0; i < 3; ++i)
                        if (static_cast<int>(br[i].e->size()) >= c) {
                            zi = i;
                            break;
                        }
                    if (zi == -1) continue;
                    const int xi = zi == 0 ? 1 : 0;
                    const int yi = zi == 2 ? 1 : 2;
                    found = theta_witness(g, c, u, w2, *br[xi].v, *br[xi].e,
                                          *br[yi].v, *br[yi].e, *br[zi].v,
                                          *br[zi].e);
                    if (theta) {
                        theta->u = u;
                        theta->v = w2;
                        theta->path_vertices = {*br[xi].v, *br[yi].v, *br[zi].v};
                        theta->path_edges = {*br[xi].e, *br[yi].e, *br[zi].e};
                    }
                    return false;
                }
                if (on_path[w2]) continue;
                on_path[w2] = 1;
                qverts.push_back(w2);
                qedges.push_back(e);
                const bool keep = grow(u, w2);
                qedges.pop_back();
                qverts.pop_back();
                on_path[w2] = 0;
                if (!keep) return false;
            }
            return true;
        };

        bool keep_going = true;
        for (int i = 0; i < L && keep_going; ++i) {
            const int u = cv[i];
            qverts.assign(1, u);
            qedges.clear();
            keep_going = grow(u, u);
        }

        for (int x : cv) on_cycle[x] = 0;
        for (int e : ce) cyc_edge[e] = 0;
        return keep_going;
    });
    return found;
}

// ---- rendering -------------------------------------------------------------

std::string witness_to_dot(const PlaneMultigraph& g, const MinorWitness& w,
                           const std::string& name) {
    static const char* palette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231",
                                    "#911eb4", "#46f0f0", "#f032e6", "#bcf60c",
                                    "#fabebe", "#008080", "#e6beff", "#9a6324"};
    std::vector<int> owner(g.vertex_count(), -1);
    for (size_t b = 0; b < w.branch_sets.size(); ++b)
        for (int v : w.branch_sets[b]) owner[v] = static_cast<int>(b);
    std::vector<char> mapped(g.edge_count(), 0);
    for (int e : w.edge_map)
        if (e >= 0) mapped[e] = 1;

    std::ostringstream os;
    os << "graph " << name << " {\n";
    os << "  label=\"" << target_name(w.target, w.m) << " minor\";\n";
    for (size_t b = 0; b < w.branch_sets.size(); ++b) {
        os << "  subgraph cluster_branch" << b << " {\n";
        os << "    color=\"" << palette[b % 12] << "\";\n";
        for (int v : w.branch_sets[b])
            os << "    v" << v << " [style=filled, fillcolor=\""
               << palette[b % 12] << "\"];\n";
        os << "  }\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (owner[v] == -1) os << "  v" << v << ";\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.ends(e);
        os << "  v" << u << " -- v" << v;
        if (mapped[e]) os << " [penwidth=2.5, label=\"e" << e << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace leadsto
