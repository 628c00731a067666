#pragma once

#include <cstdint>
#include <optional>

#include "fcolor/coloring.hpp"
#include "fcolor/structure.hpp"

namespace fcolor {

/// Vertex-split reduction: v becomes f(v) copies that partition its
/// incident edges round-robin, so each copy carries at most
/// ceil(d(v)/f(v)) edges and Delta(split) <= delta_f. Split edge i
/// corresponds to original edge i.
struct SplitGraph {
    Graph split;
    std::vector<int> origin;              // split vertex -> original vertex
    std::vector<std::vector<int>> copies; // original vertex -> its split copies
};

SplitGraph split_instance(const FInstance& inst);

/// Proper edge coloring with at most Delta(g)+1 colors via fan rotation
/// and two-color path inversion. Deterministic in edge index order.
FColoring vizing_color(const Graph& g);

class NotBipartite : public std::runtime_error {
public:
    explicit NotBipartite(const std::string& what) : std::runtime_error(what) {}
};

/// Proper edge coloring of a bipartite graph with exactly Delta(g)
/// colors via alternating-path augmentation.
FColoring konig_color(const Graph& g, const Bipartition& part);

/// Valid f-coloring with at most max_v ceil((d(v)+1)/f(v)) colors
/// (hence at most delta_f + 1): split, properly color (Koenig when the
/// split is bipartite, else fan rotation), merge back. Bipartite inputs
/// get exactly delta_f colors.
FColoring upper_color_f(const FInstance& inst);

class InternalExtensionFailure : public std::runtime_error {
public:
    explicit InternalExtensionFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Extends a valid k-coloring of E minus one edge to all of E with the
/// same k colors. Requires the spare-color hypothesis: every neighbor x
/// of either endpoint has some color appearing at most f(x)-1 times.
/// Strategy: common spare color, then two-color chain flips, then
/// exhaustive recoloring of the edges within distance 2 of e.
FColoring extend_one_edge(const FInstance& inst, const FColoring& partial, int edge_idx, int k);

enum class SearchStatus { Found, ProvedNone, Exhausted };

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<FColoring> coloring;
    std::uint64_t nodes_expanded = 0;
};

/// Exact backtracking search for a valid f-coloring with at most k
/// colors. Edges are ordered most-constrained-first (descending
/// degeneracy of endpoints); edge at search position i may use colors
/// 1..min(i+1, k). budget = 0 means unlimited. ProvedNone only on full
/// exhaustion of the tree.
SearchOutcome search_f_coloring(const FInstance& inst, int k, std::uint64_t budget = 0);

/// search_f_coloring at k = delta_f.
SearchOutcome search_delta_f_coloring(const FInstance& inst, std::uint64_t budget = 0);

/// Tightest per-vertex upper bound max_v ceil((d(v)+1)/f(v)).
int upper_bound_colors(const FInstance& inst);

}  // namespace fcolor
