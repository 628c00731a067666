#include "fcolor/structure.hpp"

#include <algorithm>
#include <queue>

namespace fcolor {

CoreInfo f_core(const FInstance& inst) {
    if (inst.delta_f() == 0) throw EmptyGraphError();
    const Graph& g = inst.graph();
    CoreInfo info;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == inst.f_of(v) * inst.delta_f()) info.members.push_back(v);
    }
    std::vector<int> pos(static_cast<size_t>(g.vertex_count()), -1);
    for (int i = 0; i < static_cast<int>(info.members.size()); ++i)
        pos[static_cast<size_t>(info.members[static_cast<size_t>(i)])] = i;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int a = pos[static_cast<size_t>(e.u)];
        int b = pos[static_cast<size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    info.core_graph = Graph(static_cast<int>(info.members.size()), std::move(edges));

    info.max_core_degree = info.core_graph.max_degree();
    info.is_forest = true;
    info.all_components_unicyclic_or_tree = true;
    for (const auto& comp : connected_components(info.core_graph)) {
        int ecount = 0;
        for (int v : comp) ecount += info.core_graph.degree(v);
        ecount /= 2;
        const int vcount = static_cast<int>(comp.size());
        if (ecount > vcount - 1) info.is_forest = false;
        if (ecount > vcount) info.all_components_unicyclic_or_tree = false;
    }
    info.is_two_regular = !info.members.empty();
    for (int v = 0; v < info.core_graph.vertex_count(); ++v) {
        if (info.core_graph.degree(v) != 2) info.is_two_regular = false;
    }
    return info;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    Bipartition part;
    part.side.assign(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (part.side[static_cast<size_t>(s)] >= 0) continue;
        part.side[static_cast<size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                int& sw = part.side[static_cast<size_t>(w)];
                if (sw < 0) {
                    sw = 1 - part.side[static_cast<size_t>(v)];
                    q.push(w);
                } else if (sw == part.side[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return part;
}

std::optional<ClawWitness> find_claw(const Graph& g) {
    for (int c = 0; c < g.vertex_count(); ++c) {
        auto nb = g.neighbors(c);
        const int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.has_edge(nb[static_cast<size_t>(i)], nb[static_cast<size_t>(j)])) continue;
                for (int l = j + 1; l < d; ++l) {
                    int a = nb[static_cast<size_t>(i)];
                    int b = nb[static_cast<size_t>(j)];
                    int e = nb[static_cast<size_t>(l)];
                    if (!g.has_edge(a, e) && !g.has_edge(b, e))
                        return ClawWitness{c, {a, b, e}};
                }
            }
    }
    return std::nullopt;
}

bool cut_disconnects(const Graph& g, const std::vector<Edge>& cut) {
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        Edge c{std::min(e.u, e.v), std::max(e.u, e.v)};
        bool removed = false;
        for (const Edge& r : cut) {
            if (Edge{std::min(r.u, r.v), std::max(r.u, r.v)} == c) removed = true;
        }
        if (!removed) kept.push_back(e);
    }
    Graph h(g.vertex_count(), std::move(kept));
    return connected_components(h).size() > connected_components(g).size();
}

namespace {

// Side assignment for a star/bridge cut separating `separated` from the rest.
void fill_sides(const Graph& g, const std::vector<int>& separated, CutWitness& w) {
    std::vector<char> in_y(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : separated) in_y[static_cast<size_t>(v)] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_y[static_cast<size_t>(v)])
            w.side_y.push_back(v);
        else
            w.side_x.push_back(v);
    }
}

}  // namespace

std::optional<CutWitness> find_star_cut(const FInstance& inst) {
    const Graph& g = inst.graph();
    if (!is_connected(g)) throw PreconditionFailed("find_star_cut requires a connected graph");
    if (inst.delta_f() < 3) throw PreconditionFailed("find_star_cut requires delta_f >= 3");
    const int limit = inst.delta_f() - 2;
    std::optional<CutWitness> best;
    auto consider = [&](int center, const std::vector<int>& separated) {
        std::vector<Edge> cut;
        for (int w : g.neighbors(center)) {
            if (std::binary_search(separated.begin(), separated.end(), w))
                cut.push_back({std::min(center, w), std::max(center, w)});
        }
        if (cut.empty() || static_cast<int>(cut.size()) > limit) return;
        if (best && (best->cut_edges.size() < cut.size() ||
                     (best->cut_edges.size() == cut.size() && *best->star_center <= center)))
            return;
        if (!cut_disconnects(g, cut)) return;
        CutWitness w;
        w.cut_edges = std::move(cut);
        w.kind = CutKind::Star;
        w.star_center = center;
        fill_sides(g, separated, w);
        best = std::move(w);
    };

    for (int u = 0; u < g.vertex_count(); ++u) {
        // Components of G - u; each one reachable only through u yields the
        // star cut {u -> C}.
        std::vector<int> comp(static_cast<size_t>(g.vertex_count()), -1);
        comp[static_cast<size_t>(u)] = -2;
        int ncomp = 0;
        for (int s = 0; s < g.vertex_count(); ++s) {
            if (comp[static_cast<size_t>(s)] != -1) continue;
            std::vector<int> stack{s};
            comp[static_cast<size_t>(s)] = ncomp;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : g.neighbors(v)) {
                    if (comp[static_cast<size_t>(w)] == -1) {
                        comp[static_cast<size_t>(w)] = ncomp;
                        stack.push_back(w);
                    }
                }
            }
            ++ncomp;
        }
        if (ncomp < 2) continue;
        for (int c = 0; c < ncomp; ++c) {
            std::vector<int> separated;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (comp[static_cast<size_t>(v)] == c) separated.push_back(v);
            consider(u, separated);
        }
    }

    // Bridges are size-1 star cuts; covers the degenerate two-vertex case.
    if (limit >= 1) {
        for (const Edge& e : g.edges()) {
            std::vector<Edge> cut{e};
            if (!cut_disconnects(g, cut)) continue;
            // Reuse the star machinery with the lower endpoint as center.
            std::vector<Edge> kept;
            for (const Edge& o : g.edges())
                if (!(o == e)) kept.push_back(o);
            Graph h(g.vertex_count(), std::move(kept));
            for (const auto& comp : connected_components(h)) {
                if (std::binary_search(comp.begin(), comp.end(), e.v) &&
                    !std::binary_search(comp.begin(), comp.end(), e.u)) {
                    consider(e.u, comp);
                    break;
                }
            }
        }
    }
    return best;
}

MatchingCutResult find_matching_cut(const FInstance& inst, std::uint64_t budget) {
    const Graph& g = inst.graph();
    if (!is_connected(g))
        throw PreconditionFailed("find_matching_cut requires a connected graph");
    if (inst.delta_f() < 3) throw PreconditionFailed("find_matching_cut requires delta_f >= 3");
    const int n = g.vertex_count();
    const int limit = inst.delta_f() - 2;

    MatchingCutResult res;
    std::vector<int> side(static_cast<size_t>(n), -1);
    std::vector<int> crossing(static_cast<size_t>(n), 0);  // crossing edges at v
    std::vector<Edge> cut;
    side[0] = 0;  // vertex 0 pinned to X breaks the side symmetry

    // Depth-first over side assignments; a node is one vertex assignment.
    auto dfs = [&](auto&& self, int v) -> bool {
        if (res.budget_exhausted) return false;
        if (v == n) {
            bool has_y = false;
            for (int s : side)
                if (s == 1) has_y = true;
            if (!has_y || cut.empty()) return false;
            if (!cut_disconnects(g, cut)) return false;
            CutWitness w;
            w.cut_edges = cut;
            w.kind = CutKind::Matching;
            for (int x = 0; x < n; ++x)
                (side[static_cast<size_t>(x)] == 0 ? w.side_x : w.side_y).push_back(x);
            res.witness = std::move(w);
            return true;
        }
        for (int s = 0; s <= 1; ++s) {
            if (++res.nodes_expanded > budget && budget > 0) {
                res.budget_exhausted = true;
                return false;
            }
            side[static_cast<size_t>(v)] = s;
            std::vector<Edge> added;
            bool ok = true;
            for (int w : g.neighbors(v)) {
                if (w >= v || side[static_cast<size_t>(w)] != 1 - s) continue;
                if (crossing[static_cast<size_t>(v)] > 0 || crossing[static_cast<size_t>(w)] > 0 ||
                    static_cast<int>(cut.size()) >= limit) {
                    ok = false;
                    break;
                }
                ++crossing[static_cast<size_t>(v)];
                ++crossing[static_cast<size_t>(w)];
                Edge e{std::min(v, w), std::max(v, w)};
                cut.push_back(e);
                added.push_back(e);
            }
            if (ok && self(self, v + 1)) return true;
            for (const Edge& e : added) {
                --crossing[static_cast<size_t>(e.u)];
                --crossing[static_cast<size_t>(e.v)];
                cut.pop_back();
            }
            side[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    dfs(dfs, 1);
    return res;
}

bool is_graph_w(const FInstance& inst) {
    const Graph& g = inst.graph();
    if (g.vertex_count() != 6 || g.edge_count() != 10) return false;
    int hub = -1;
    for (int v = 0; v < 6; ++v) {
        if (g.degree(v) == 5) {
            if (hub >= 0) return false;
            hub = v;
        } else if (g.degree(v) != 3) {
            return false;
        }
    }
    if (hub < 0 || inst.f_of(hub) != 2) return false;
    for (int v = 0; v < 6; ++v) {
        if (v == hub) continue;
        if (inst.f_of(v) != 1) return false;
        // Rim vertices must have exactly two rim neighbors; a connected
        // 2-regular graph on five vertices is C5.
        int rim_deg = 0;
        for (int w : g.neighbors(v))
            if (w != hub) ++rim_deg;
        if (rim_deg != 2) return false;
    }
    return true;
}

}  // namespace fcolor
