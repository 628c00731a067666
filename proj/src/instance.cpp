#include "fcolor/instance.hpp"

#include <algorithm>
#include <set>

namespace fcolor {

FInstance::FInstance(Graph g, std::vector<int> f) : graph_(std::move(g)), f_(std::move(f)) {
    delta_f_ = compute_delta_f(graph_, f_);
}

int compute_delta_f(const Graph& g, const std::vector<int>& f) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        int fv = f[static_cast<size_t>(v)];
        best = std::max(best, (d + fv - 1) / fv);
    }
    return best;
}

FInstance build_instance(int n, const std::vector<Edge>& edges, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != n)
        throw BuildError(BuildErrc::NonPositiveF, n, "f must have length n");
    for (int v = 0; v < n; ++v) {
        if (f[static_cast<size_t>(v)] < 1)
            throw BuildError(BuildErrc::NonPositiveF, v,
                             "f(" + std::to_string(v) + ") must be positive");
    }
    std::set<std::pair<int, int>> seen;
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        int u = edges[static_cast<size_t>(i)].u;
        int v = edges[static_cast<size_t>(i)].v;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw BuildError(BuildErrc::VertexOutOfRange, i,
                             "edge " + std::to_string(i) + " has a vertex out of range");
        if (u == v)
            throw BuildError(BuildErrc::LoopEdge, i, "edge " + std::to_string(i) + " is a loop");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw BuildError(BuildErrc::DuplicateEdge, i,
                             "edge " + std::to_string(i) + " is a duplicate");
        canon.push_back({u, v});
    }
    std::sort(canon.begin(), canon.end());
    return FInstance(Graph(n, std::move(canon)), f);
}

FInstance induced_instance(const FInstance& inst, const std::vector<int>& vertices,
                           std::vector<int>* back_map) {
    std::vector<int> pos(static_cast<size_t>(inst.graph().vertex_count()), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        pos[static_cast<size_t>(vertices[static_cast<size_t>(i)])] = i;
    std::vector<Edge> edges;
    for (const Edge& e : inst.graph().edges()) {
        int a = pos[static_cast<size_t>(e.u)];
        int b = pos[static_cast<size_t>(e.v)];
        if (a >= 0 && b >= 0) edges.push_back({a, b});
    }
    std::vector<int> f;
    f.reserve(vertices.size());
    for (int v : vertices) f.push_back(inst.f_of(v));
    if (back_map) *back_map = vertices;
    return build_instance(static_cast<int>(vertices.size()), edges, f);
}

FInstance remove_edge(const FInstance& inst, int edge_idx) {
    std::vector<Edge> edges = inst.graph().edges();
    edges.erase(edges.begin() + edge_idx);
    return build_instance(inst.graph().vertex_count(), edges, inst.f());
}

}  // namespace fcolor
