#include "fcolor/graph.hpp"

#include <algorithm>

namespace fcolor {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    adj_.resize(static_cast<size_t>(n_));
    inc_.resize(static_cast<size_t>(n_));
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        Edge& e = edges_[static_cast<size_t>(i)];
        if (e.u > e.v) std::swap(e.u, e.v);
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
        inc_[static_cast<size_t>(e.u)].push_back(i);
        inc_[static_cast<size_t>(e.v)].push_back(i);
        index_[{e.u, e.v}] = i;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = index_.find({u, v});
    return it == index_.end() ? -1 : it->second;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[static_cast<size_t>(s)] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = static_cast<int>(out.size());
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

}  // namespace fcolor
