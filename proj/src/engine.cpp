#include "fcolor/engine.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace fcolor {

int upper_bound_colors(const FInstance& inst) {
    const Graph& g = inst.graph();
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int fv = inst.f_of(v);
        best = std::max(best, (g.degree(v) + 1 + fv - 1) / fv);
    }
    return best;
}

SplitGraph split_instance(const FInstance& inst) {
    const Graph& g = inst.graph();
    const int n = g.vertex_count();
    SplitGraph sg;
    std::vector<int> offset(static_cast<size_t>(n), 0);
    int total = 0;
    sg.copies.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        offset[static_cast<size_t>(v)] = total;
        for (int i = 0; i < inst.f_of(v); ++i) {
            sg.copies[static_cast<size_t>(v)].push_back(total + i);
            sg.origin.push_back(v);
        }
        total += inst.f_of(v);
    }
    // Round-robin over each vertex's incident edges in index order.
    std::vector<int> counter(static_cast<size_t>(n), 0);
    std::vector<Edge> split_edges;
    split_edges.reserve(static_cast<size_t>(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        int su = offset[static_cast<size_t>(e.u)] + counter[static_cast<size_t>(e.u)]++ % inst.f_of(e.u);
        int sv = offset[static_cast<size_t>(e.v)] + counter[static_cast<size_t>(e.v)]++ % inst.f_of(e.v);
        split_edges.push_back({std::min(su, sv), std::max(su, sv)});
    }
    sg.split = Graph(total, std::move(split_edges));
    return sg;
}

namespace {

// Shared bookkeeping for proper edge coloring: at[v][c] = edge index
// carrying color c at v, or -1.
struct ProperState {
    const Graph& g;
    int k;
    std::vector<int> col;               // edge -> color (0 = none)
    std::vector<std::vector<int>> at;   // vertex -> color -> edge

    ProperState(const Graph& gg, int kk)
        : g(gg),
          k(kk),
          col(static_cast<size_t>(gg.edge_count()), 0),
          at(static_cast<size_t>(gg.vertex_count()),
             std::vector<int>(static_cast<size_t>(kk) + 1, -1)) {}

    bool is_free(int v, int c) const { return at[static_cast<size_t>(v)][static_cast<size_t>(c)] < 0; }

    int least_free(int v) const {
        for (int c = 1; c <= k; ++c)
            if (is_free(v, c)) return c;
        return -1;
    }

    void assign(int e, int c) {
        const Edge& ed = g.edge(e);
        col[static_cast<size_t>(e)] = c;
        at[static_cast<size_t>(ed.u)][static_cast<size_t>(c)] = e;
        at[static_cast<size_t>(ed.v)][static_cast<size_t>(c)] = e;
    }

    void unassign(int e) {
        int c = col[static_cast<size_t>(e)];
        if (c == 0) return;
        const Edge& ed = g.edge(e);
        col[static_cast<size_t>(e)] = 0;
        at[static_cast<size_t>(ed.u)][static_cast<size_t>(c)] = -1;
        at[static_cast<size_t>(ed.v)][static_cast<size_t>(c)] = -1;
    }
};

}  // namespace

FColoring vizing_color(const Graph& g) {
    const int m = g.edge_count();
    if (m == 0) return {0, {}};
    const int K = g.max_degree() + 1;
    ProperState st(g, K);

    auto invert = [&](int start, int c, int d) {
        std::vector<int> path;
        std::vector<int> old;
        int cur = start;
        int want = d;
        while (true) {
            int e = st.at[static_cast<size_t>(cur)][static_cast<size_t>(want)];
            if (e < 0) break;
            path.push_back(e);
            old.push_back(st.col[static_cast<size_t>(e)]);
            const Edge& ed = g.edge(e);
            cur = (ed.u == cur) ? ed.v : ed.u;
            want = (want == d) ? c : d;
        }
        for (int e : path) st.unassign(e);
        for (size_t i = 0; i < path.size(); ++i)
            st.assign(path[i], old[i] == c ? d : c);
    };

    for (int ei = 0; ei < m; ++ei) {
        const int u = g.edge(ei).u;
        const int v = g.edge(ei).v;

        // Fast path: a color free at both endpoints needs no fan.
        int common = -1;
        for (int cc = 1; cc <= K; ++cc) {
            if (st.is_free(u, cc) && st.is_free(v, cc)) {
                common = cc;
                break;
            }
        }
        if (common > 0) {
            st.assign(ei, common);
            continue;
        }

        // Maximal fan of u starting at v: each next edge's color is free
        // at the previous fan vertex.
        std::vector<int> fan{v};
        std::set<int> in_fan{v};
        bool grew = true;
        while (grew) {
            grew = false;
            for (int w : g.neighbors(u)) {
                if (in_fan.count(w)) continue;
                int e2 = g.edge_index(u, w);
                int c2 = st.col[static_cast<size_t>(e2)];
                if (c2 == 0) continue;
                if (st.is_free(fan.back(), c2)) {
                    fan.push_back(w);
                    in_fan.insert(w);
                    grew = true;
                    break;
                }
            }
        }

        const int c = st.least_free(u);
        const int d = st.least_free(fan.back());
        if (!st.is_free(u, d)) invert(u, c, d);

        // First fan prefix that is still a fan after inversion and whose
        // tip has d free.
        int w_idx = -1;
        for (int i = 0; i < static_cast<int>(fan.size()); ++i) {
            bool prefix_ok = true;
            for (int j = 1; j <= i; ++j) {
                int e2 = g.edge_index(u, fan[static_cast<size_t>(j)]);
                int c2 = st.col[static_cast<size_t>(e2)];
                if (c2 == 0 || !st.is_free(fan[static_cast<size_t>(j - 1)], c2)) {
                    prefix_ok = false;
                    break;
                }
            }
            if (prefix_ok && st.is_free(fan[static_cast<size_t>(i)], d)) {
                w_idx = i;
                break;
            }
        }
        if (w_idx < 0) throw std::logic_error("fan rotation invariant violated");

        // Rotate the prefix and finish with d on the last edge.
        std::vector<int> shifted;
        for (int j = 1; j <= w_idx; ++j)
            shifted.push_back(st.col[static_cast<size_t>(g.edge_index(u, fan[static_cast<size_t>(j)]))]);
        for (int j = 1; j <= w_idx; ++j)
            st.unassign(g.edge_index(u, fan[static_cast<size_t>(j)]));
        for (int j = 0; j < w_idx; ++j)
            st.assign(g.edge_index(u, fan[static_cast<size_t>(j)]), shifted[static_cast<size_t>(j)]);
        st.assign(g.edge_index(u, fan[static_cast<size_t>(w_idx)]), d);
    }
    return {K, st.col};
}

FColoring konig_color(const Graph& g, const Bipartition& part) {
    for (const Edge& e : g.edges()) {
        if (part.side[static_cast<size_t>(e.u)] == part.side[static_cast<size_t>(e.v)])
            throw NotBipartite("partition does not separate edge " + std::to_string(e.u) + "-" +
                               std::to_string(e.v));
    }
    const int m = g.edge_count();
    if (m == 0) return {0, {}};
    const int K = g.max_degree();
    ProperState st(g, K);

    for (int ei = 0; ei < m; ++ei) {
        const int u = g.edge(ei).u;
        const int v = g.edge(ei).v;
        int common = -1;
        for (int cc = 1; cc <= K; ++cc) {
            if (st.is_free(u, cc) && st.is_free(v, cc)) {
                common = cc;
                break;
            }
        }
        if (common > 0) {
            st.assign(ei, common);
            continue;
        }
        const int a = st.least_free(u);
        const int b = st.least_free(v);
        // Swap a and b along the maximal alternating path from v; it
        // cannot end at u (the endpoints would then share a side).
        std::vector<int> path;
        std::vector<int> old;
        int cur = v;
        int want = a;
        while (true) {
            int e2 = st.at[static_cast<size_t>(cur)][static_cast<size_t>(want)];
            if (e2 < 0) break;
            path.push_back(e2);
            old.push_back(st.col[static_cast<size_t>(e2)]);
            const Edge& ed = g.edge(e2);
            cur = (ed.u == cur) ? ed.v : ed.u;
            want = (want == a) ? b : a;
        }
        for (int e2 : path) st.unassign(e2);
        for (size_t i = 0; i < path.size(); ++i)
            st.assign(path[i], old[i] == a ? b : a);
        if (!st.is_free(u, a) || !st.is_free(v, a))
            throw std::logic_error("alternating path invariant violated");
        st.assign(ei, a);
    }
    return {K, st.col};
}

namespace {

// Vertices ranked most-constrained first: reverse of the min-degree
// removal (degeneracy) order.
std::vector<int> constrained_rank(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    std::vector<char> removed(static_cast<size_t>(n), 0);
    std::vector<int> rank(static_cast<size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (removed[static_cast<size_t>(v)]) continue;
            if (pick < 0 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(pick)]) pick = v;
        }
        removed[static_cast<size_t>(pick)] = 1;
        rank[static_cast<size_t>(pick)] = n - 1 - step;
        for (int w : g.neighbors(pick))
            if (!removed[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
    }
    return rank;
}

}  // namespace

SearchOutcome search_f_coloring(const FInstance& inst, int k, std::uint64_t budget) {
    const Graph& g = inst.graph();
    const int m = g.edge_count();
    SearchOutcome out;
    if (m == 0) {
        out.status = SearchStatus::Found;
        out.coloring = FColoring{k, {}};
        return out;
    }
    if (k <= 0) {
        out.status = SearchStatus::ProvedNone;
        return out;
    }

    std::vector<int> rank = constrained_rank(g);
    std::vector<int> order(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Edge& ea = g.edge(a);
        const Edge& eb = g.edge(b);
        auto key = [&](const Edge& e) {
            int ru = rank[static_cast<size_t>(e.u)];
            int rv = rank[static_cast<size_t>(e.v)];
            return std::pair<int, int>{std::min(ru, rv), std::max(ru, rv)};
        };
        auto ka = key(ea), kb = key(eb);
        if (ka != kb) return ka < kb;
        return a < b;
    });

    const int n = g.vertex_count();
    std::vector<std::vector<int>> counts(static_cast<size_t>(n),
                                         std::vector<int>(static_cast<size_t>(k) + 1, 0));
    std::vector<int> colored_deg(static_cast<size_t>(n), 0);
    std::vector<int> col(static_cast<size_t>(m), 0);
    bool exhausted = false;

    auto capacity_ok = [&](int v) {
        // Uncolored incident edges must fit the remaining color capacity.
        int uncolored = g.degree(v) - colored_deg[static_cast<size_t>(v)];
        return uncolored <= inst.f_of(v) * k - colored_deg[static_cast<size_t>(v)];
    };

    auto dfs = [&](auto&& self, int pos) -> bool {
        if (pos == m) return true;
        const int ei = order[static_cast<size_t>(pos)];
        const Edge& e = g.edge(ei);
        const int cap = std::min(pos + 1, k);  // color symmetry breaking
        for (int c = 1; c <= cap; ++c) {
            if (counts[static_cast<size_t>(e.u)][static_cast<size_t>(c)] >= inst.f_of(e.u)) continue;
            if (counts[static_cast<size_t>(e.v)][static_cast<size_t>(c)] >= inst.f_of(e.v)) continue;
            if (budget > 0 && out.nodes_expanded >= budget) {
                exhausted = true;
                return false;
            }
            ++out.nodes_expanded;
            col[static_cast<size_t>(ei)] = c;
            ++counts[static_cast<size_t>(e.u)][static_cast<size_t>(c)];
            ++counts[static_cast<size_t>(e.v)][static_cast<size_t>(c)];
            ++colored_deg[static_cast<size_t>(e.u)];
            ++colored_deg[static_cast<size_t>(e.v)];
            if (capacity_ok(e.u) && capacity_ok(e.v) && self(self, pos + 1)) return true;
            col[static_cast<size_t>(ei)] = 0;
            --counts[static_cast<size_t>(e.u)][static_cast<size_t>(c)];
            --counts[static_cast<size_t>(e.v)][static_cast<size_t>(c)];
            --colored_deg[static_cast<size_t>(e.u)];
            --colored_deg[static_cast<size_t>(e.v)];
            if (exhausted) return false;
        }
        return false;
    };

    if (dfs(dfs, 0)) {
        out.status = SearchStatus::Found;
        out.coloring = FColoring{k, col};
    } else {
        out.status = exhausted ? SearchStatus::Exhausted : SearchStatus::ProvedNone;
    }
    return out;
}

SearchOutcome search_delta_f_coloring(const FInstance& inst, std::uint64_t budget) {
    return search_f_coloring(inst, inst.delta_f(), budget);
}

FColoring upper_color_f(const FInstance& inst) {
    const Graph& g = inst.graph();
    if (g.edge_count() == 0) return {0, {}};
    const int bound = upper_bound_colors(inst);

    SplitGraph sg = split_instance(inst);
    FColoring split_col;
    auto part = is_bipartite(sg.split);
    if (part)
        split_col = konig_color(sg.split, *part);
    else
        split_col = vizing_color(sg.split);

    // Split edge i corresponds to original edge i, so the merge is a copy.
    FColoring merged = compact_colors(FColoring{split_col.k, split_col.color});
    if (merged.k <= bound) return merged;

    // The fan-rotation branch can land one color above the per-vertex
    // bound; a coloring within the bound always exists, so exact search
    // closes the gap.
    SearchOutcome out = search_f_coloring(inst, bound, 0);
    if (out.status != SearchStatus::Found)
        throw std::logic_error("no coloring within the per-vertex upper bound");
    return compact_colors(*out.coloring);
}

namespace {

std::vector<int> spare_colors(const FInstance& inst, const std::vector<std::vector<int>>& counts,
                              int v, int k) {
    std::vector<int> out;
    for (int c = 1; c <= k; ++c)
        if (counts[static_cast<size_t>(v)][static_cast<size_t>(c)] <= inst.f_of(v) - 1)
            out.push_back(c);
    return out;
}

bool coloring_valid(const FInstance& inst, const FColoring& col) {
    auto counts = color_counts(inst, col);
    for (int v = 0; v < inst.graph().vertex_count(); ++v)
        for (int c = 1; c <= col.k; ++c)
            if (counts[static_cast<size_t>(v)][static_cast<size_t>(c)] > inst.f_of(v)) return false;
    return true;
}

// Alternating recoloring walk: free color `take` at `start` by pushing
// the surplus along take/give edges. Returns the adjusted coloring when
// the walk produces a globally valid assignment of `take` to edge_idx.
std::optional<FColoring> chain_attempt(const FInstance& inst, FColoring col, int edge_idx,
                                       int start, int take, int give) {
    const Graph& g = inst.graph();
    auto counts = color_counts(inst, col);
    std::set<int> visited;
    int cur = start;
    int want = take;
    int other = give;
    while (counts[static_cast<size_t>(cur)][static_cast<size_t>(want)] >
           inst.f_of(cur) - (cur == start ? 1 : 0)) {
        int pick = -1;
        for (int e2 : g.incident(cur)) {
            if (e2 == edge_idx || visited.count(e2)) continue;
            if (col.color[static_cast<size_t>(e2)] == want) {
                pick = e2;
                break;
            }
        }
        if (pick < 0) break;
        visited.insert(pick);
        col.color[static_cast<size_t>(pick)] = other;
        const Edge& ed = g.edge(pick);
        int nxt = (ed.u == cur) ? ed.v : ed.u;
        ++counts[static_cast<size_t>(cur)][static_cast<size_t>(other)];
        --counts[static_cast<size_t>(cur)][static_cast<size_t>(want)];
        ++counts[static_cast<size_t>(nxt)][static_cast<size_t>(other)];
        --counts[static_cast<size_t>(nxt)][static_cast<size_t>(want)];
        if (counts[static_cast<size_t>(nxt)][static_cast<size_t>(other)] <= inst.f_of(nxt)) break;
        cur = nxt;
        std::swap(want, other);
    }
    col.color[static_cast<size_t>(edge_idx)] = take;
    if (coloring_valid(inst, col)) return col;
    return std::nullopt;
}

}  // namespace

FColoring extend_one_edge(const FInstance& inst, const FColoring& partial, int edge_idx, int k) {
    const Graph& g = inst.graph();
    if (static_cast<int>(partial.color.size()) != g.edge_count())
        throw CoverageMismatch("partial coloring size mismatch");
    if (partial.color[static_cast<size_t>(edge_idx)] != 0)
        throw PreconditionFailed("edge to extend is already colored");
    for (int i = 0; i < g.edge_count(); ++i) {
        int c = partial.color[static_cast<size_t>(i)];
        if (i != edge_idx && (c < 1 || c > k))
            throw CoverageMismatch("partial coloring leaves extra edges unassigned");
    }
    FColoring work = partial;
    work.k = k;
    if (!coloring_valid(inst, work)) throw PreconditionFailed("partial coloring is invalid");

    const Edge e = g.edge(edge_idx);
    auto counts = color_counts(inst, work);

    auto su = spare_colors(inst, counts, e.u, k);
    auto sv = spare_colors(inst, counts, e.v, k);
    if (su.empty() || sv.empty())
        throw PreconditionFailed("an endpoint of the edge has no spare color");

    // The guarantee of success needs a spare color at every neighbor of
    // the endpoints; without it the attempts below may legitimately fail.
    bool hypothesis = true;
    std::set<int> hood;
    for (int x : g.neighbors(e.u)) hood.insert(x);
    for (int x : g.neighbors(e.v)) hood.insert(x);
    for (int x : hood)
        if (spare_colors(inst, counts, x, k).empty()) hypothesis = false;
    for (int c : su) {
        if (std::binary_search(sv.begin(), sv.end(), c)) {
            work.color[static_cast<size_t>(edge_idx)] = c;
            return work;
        }
    }

    // Lowest spare at each endpoint; walk from the lower endpoint first.
    const int alpha = su.front();
    const int beta = sv.front();
    if (auto got = chain_attempt(inst, work, edge_idx, e.v, alpha, beta)) return *got;
    if (auto got = chain_attempt(inst, work, edge_idx, e.u, beta, alpha)) return *got;

    // Exhaustive recoloring over the edges within distance 2 of e.
    std::set<int> near{e.u, e.v};
    for (int x : g.neighbors(e.u)) near.insert(x);
    for (int x : g.neighbors(e.v)) near.insert(x);
    std::vector<int> ball;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& ed = g.edge(i);
        if (near.count(ed.u) || near.count(ed.v)) ball.push_back(i);
    }

    FColoring cand = work;
    for (int i : ball) cand.color[static_cast<size_t>(i)] = 0;
    auto fixed_counts = color_counts(inst, cand);
    auto dfs = [&](auto&& self, size_t pos) -> bool {
        if (pos == ball.size()) return true;
        int ei = ball[pos];
        const Edge& ed = g.edge(ei);
        for (int c = 1; c <= k; ++c) {
            if (fixed_counts[static_cast<size_t>(ed.u)][static_cast<size_t>(c)] >= inst.f_of(ed.u))
                continue;
            if (fixed_counts[static_cast<size_t>(ed.v)][static_cast<size_t>(c)] >= inst.f_of(ed.v))
                continue;
            cand.color[static_cast<size_t>(ei)] = c;
            ++fixed_counts[static_cast<size_t>(ed.u)][static_cast<size_t>(c)];
            ++fixed_counts[static_cast<size_t>(ed.v)][static_cast<size_t>(c)];
            if (self(self, pos + 1)) return true;
            cand.color[static_cast<size_t>(ei)] = 0;
            --fixed_counts[static_cast<size_t>(ed.u)][static_cast<size_t>(c)];
            --fixed_counts[static_cast<size_t>(ed.v)][static_cast<size_t>(c)];
        }
        return false;
    };
    if (dfs(dfs, 0)) return cand;
    if (!hypothesis)
        throw PreconditionFailed("no spare color at some neighbor of the edge");
    throw InternalExtensionFailure("neighborhood recoloring failed despite spare colors");
}

}  // namespace fcolor
