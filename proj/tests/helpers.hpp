#pragma once

#include <vector>

#include "fcolor/instance.hpp"
#include "fcolor/io.hpp"

namespace testutil {

inline fcolor::FInstance make(int n, std::vector<fcolor::Edge> edges, std::vector<int> f) {
    return fcolor::build_instance(n, edges, f);
}

inline fcolor::FInstance make1(int n, std::vector<fcolor::Edge> edges) {
    return fcolor::build_instance(n, edges, std::vector<int>(static_cast<size_t>(n), 1));
}

inline fcolor::FInstance family(const std::string& name, std::vector<std::string> params = {},
                                const std::string& f_spec = "const:1") {
    return fcolor::gen_family(name, params, f_spec);
}

/// Random connected instance: spanning tree plus extra edges, f values
/// uniform in 1..max_f.
inline fcolor::FInstance random_connected(fcolor::SeededRng& rng, int max_n, int max_edges,
                                          int max_f) {
    int n = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_n - 1)));
    std::vector<fcolor::Edge> edges;
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v)));
        edges.push_back({u, v});
    }
    int cap = std::min(max_edges, n * (n - 1) / 2);
    int extra = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(cap) + 1));
    for (int t = 0; t < extra && static_cast<int>(edges.size()) < cap; ++t) {
        int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        fcolor::Edge e{std::min(u, v), std::max(u, v)};
        bool dup = false;
        for (const auto& have : edges) dup = dup || have == e;
        if (!dup) edges.push_back(e);
    }
    std::vector<int> f;
    for (int v = 0; v < n; ++v)
        f.push_back(1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_f))));
    return fcolor::build_instance(n, edges, f);
}

}  // namespace testutil
