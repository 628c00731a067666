#include "fcolor/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fcolor {

OracleResult exact_chi_f(const FInstance& inst) {
    const Graph& g = inst.graph();
    if (g.edge_count() == 0) throw EmptyGraphError();
    if (g.edge_count() > kOracleEdgeCap)
        throw TooLarge("exact_chi_f capped at " + std::to_string(kOracleEdgeCap) + " edges");

    OracleResult res;
    SearchOutcome out = search_delta_f_coloring(inst, 0);
    res.nodes_expanded = out.nodes_expanded;
    if (out.status == SearchStatus::Found) {
        res.chi_f = inst.delta_f();
        res.witness = compact_colors(*out.coloring);
        return res;
    }
    res.exhausted_at_delta_f = true;
    res.chi_f = inst.delta_f() + 1;
    res.witness = upper_color_f(inst);
    if (res.witness.k != inst.delta_f() + 1)
        throw InternalInconsistency("search exhausted at delta_f but the constructive bound "
                                    "produced " +
                                    std::to_string(res.witness.k) + " colors");
    return res;
}

bool is_f_critical(const FInstance& inst) {
    if (!is_connected(inst.graph())) return false;
    OracleResult whole = exact_chi_f(inst);
    if (whole.chi_f != inst.delta_f() + 1) return false;
    for (int i = 0; i < inst.graph().edge_count(); ++i) {
        FInstance sub = remove_edge(inst, i);
        if (sub.graph().edge_count() == 0) continue;  // single edge: chi drops to 0
        OracleResult del = exact_chi_f(sub);
        if (del.chi_f >= whole.chi_f) return false;
    }
    return true;
}

namespace {

// Adjacency rows as bitmasks, for canonicalization and extension.
std::vector<std::uint8_t> adjacency_rows(const Graph& g) {
    std::vector<std::uint8_t> rows(static_cast<size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        rows[static_cast<size_t>(e.u)] |= static_cast<std::uint8_t>(1u << e.v);
        rows[static_cast<size_t>(e.v)] |= static_cast<std::uint8_t>(1u << e.u);
    }
    return rows;
}

// Minimum upper-triangle bit string over degree-preserving placements,
// found by position-by-position backtracking with prefix pruning.
struct Canonicalizer {
    int n;
    const std::vector<std::uint8_t>& rows;
    std::vector<int> deg;
    std::vector<int> target;  // required degree at each position (descending)
    std::vector<int> perm;    // position -> vertex
    std::vector<char> used;
    std::uint64_t best = ~0ULL;
    int total_bits;

    Canonicalizer(int nn, const std::vector<std::uint8_t>& r) : n(nn), rows(r) {
        deg.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = __builtin_popcount(rows[static_cast<size_t>(v)]);
        target = deg;
        std::sort(target.begin(), target.end(), std::greater<int>());
        perm.assign(static_cast<size_t>(n), -1);
        used.assign(static_cast<size_t>(n), 0);
        total_bits = n * (n - 1) / 2;
    }

    void run(int pos, std::uint64_t bits, int bits_filled) {
        if (pos == n) {
            std::uint64_t key = total_bits == 0 ? 0 : bits << (64 - total_bits);
            best = std::min(best, key);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)] || deg[static_cast<size_t>(v)] != target[static_cast<size_t>(pos)])
                continue;
            // Append adjacency to already-placed vertices, MSB first.
            std::uint64_t next = bits;
            for (int p = 0; p < pos; ++p) {
                next = (next << 1) |
                       ((rows[static_cast<size_t>(v)] >> perm[static_cast<size_t>(p)]) & 1u);
            }
            int nb = bits_filled + pos;
            // Prefix prune against the best complete key found so far.
            if (best != ~0ULL && nb > 0) {
                std::uint64_t prefix = next << (64 - nb);
                std::uint64_t best_prefix = (best >> (64 - nb)) << (64 - nb);
                if (prefix > best_prefix) continue;
            }
            used[static_cast<size_t>(v)] = 1;
            perm[static_cast<size_t>(pos)] = v;
            run(pos + 1, next, nb);
            used[static_cast<size_t>(v)] = 0;
        }
    }
};

Graph graph_from_rows(int n, const std::vector<std::uint8_t>& rows) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((rows[static_cast<size_t>(u)] >> v) & 1u) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

std::uint64_t key_of_rows(int n, const std::vector<std::uint8_t>& rows) {
    Canonicalizer canon(n, rows);
    canon.run(0, 0, 0);
    return canon.best;
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
    if (g.vertex_count() > 8) throw TooLarge("canonical_key supports at most 8 vertices");
    auto rows = adjacency_rows(g);
    return key_of_rows(g.vertex_count(), rows);
}

std::vector<Graph> enumerate_connected_graphs(int max_n) {
    if (max_n > 8) throw TooLarge("enumeration supports at most 8 vertices");
    std::vector<Graph> out;
    if (max_n < 1) return out;

    // Grow all non-isomorphic graphs one vertex at a time; every graph on
    // n vertices extends one on n-1.
    std::vector<std::vector<std::uint8_t>> current{{0}};  // K1
    out.push_back(graph_from_rows(1, current.front()));
    for (int n = 2; n <= max_n; ++n) {
        std::map<std::uint64_t, std::vector<std::uint8_t>> seen;
        for (const auto& base : current) {
            for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                std::vector<std::uint8_t> rows = base;
                rows.push_back(static_cast<std::uint8_t>(mask));
                for (int v = 0; v < n - 1; ++v)
                    if ((mask >> v) & 1u)
                        rows[static_cast<size_t>(v)] |=
                            static_cast<std::uint8_t>(1u << (n - 1));
                std::uint64_t key = key_of_rows(n, rows);
                seen.emplace(key, std::move(rows));
            }
        }
        current.clear();
        for (auto& [key, rows] : seen) {
            Graph g = graph_from_rows(n, rows);
            current.push_back(rows);
            if (is_connected(g)) out.push_back(std::move(g));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
        if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
        return a.edge_count() < b.edge_count();
    });
    return out;
}

std::vector<int> apply_f_pattern(const Graph& g, const std::string& pattern) {
    auto colon = pattern.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad f pattern: " + pattern);
    const std::string kind = pattern.substr(0, colon);
    const int k = std::stoi(pattern.substr(colon + 1));
    if (k < 1) throw std::invalid_argument("bad f pattern value: " + pattern);
    std::vector<int> f(static_cast<size_t>(g.vertex_count()), 1);
    if (kind == "const") {
        std::fill(f.begin(), f.end(), k);
    } else if (kind == "hub") {
        int hub = 0;
        for (int v = 1; v < g.vertex_count(); ++v)
            if (g.degree(v) > g.degree(hub)) hub = v;
        f[static_cast<size_t>(hub)] = k;
    } else {
        throw std::invalid_argument("bad f pattern kind: " + pattern);
    }
    return f;
}

void enumerate_instances(int max_n, const std::vector<std::string>& f_patterns,
                         const std::function<void(const FInstance&)>& sink) {
    for (const Graph& g : enumerate_connected_graphs(max_n)) {
        for (const auto& pat : f_patterns) {
            sink(FInstance(g, apply_f_pattern(g, pat)));
        }
    }
}

}  // namespace fcolor
