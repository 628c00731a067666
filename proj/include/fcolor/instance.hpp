#pragma once

#include <numeric>
#include <vector>

#include "fcolor/graph.hpp"

namespace fcolor {

/// A simple graph paired with a positive vertex function f.
/// delta_f = max over v of ceil(d(v)/f(v)); 0 for edgeless graphs.
class FInstance {
public:
    FInstance() = default;
    FInstance(Graph g, std::vector<int> f);

    const Graph& graph() const { return graph_; }
    const std::vector<int>& f() const { return f_; }
    int f_of(int v) const { return f_[static_cast<size_t>(v)]; }
    int delta_f() const { return delta_f_; }

    friend bool operator==(const FInstance& a, const FInstance& b) {
        return a.graph_ == b.graph_ && a.f_ == b.f_;
    }

private:
    Graph graph_;
    std::vector<int> f_;
    int delta_f_ = 0;
};

/// Validates and builds an instance. Edges are canonicalized (u < v,
/// sorted lexicographically). Throws BuildError on malformed input.
FInstance build_instance(int n, const std::vector<Edge>& edges, const std::vector<int>& f);

/// Recompute-from-scratch delta_f, used to cross-check the cached value.
int compute_delta_f(const Graph& g, const std::vector<int>& f);

/// Sub-instance induced on a sorted vertex subset; `back_map` receives the
/// new-index -> old-index translation when non-null.
FInstance induced_instance(const FInstance& inst, const std::vector<int>& vertices,
                           std::vector<int>* back_map = nullptr);

/// Instance with one edge removed (same vertex set, same f).
FInstance remove_edge(const FInstance& inst, int edge_idx);

}  // namespace fcolor
