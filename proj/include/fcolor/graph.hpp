#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fcolor {

/// Unordered edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class BuildErrc {
    LoopEdge,
    DuplicateEdge,
    VertexOutOfRange,
    NonPositiveF,
};

/// Rejection of malformed instance input. `index` names the offending
/// edge position (or vertex index for NonPositiveF).
class BuildError : public std::runtime_error {
public:
    BuildError(BuildErrc code, int index, const std::string& what)
        : std::runtime_error(what), code_(code), index_(index) {}

    BuildErrc code() const { return code_; }
    int index() const { return index_; }

private:
    BuildErrc code_;
    int index_;
};

/// Simple undirected graph on dense 0-based vertex indices.
/// Edge order is preserved as given to the constructor; adjacency lists
/// are kept sorted.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<size_t>(i)]; }
    std::span<const int> neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool has_edge(int u, int v) const;
    /// Index into edges() for {u,v}; -1 when absent.
    int edge_index(int u, int v) const;
    int max_degree() const;

    /// Incident edge indices of v, ascending.
    const std::vector<int>& incident(int v) const { return inc_[static_cast<size_t>(v)]; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
    std::map<std::pair<int, int>, int> index_;
};

/// Connected components as vertex subsets, each sorted, ordered by
/// smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace fcolor
