#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "fcolor/instance.hpp"

namespace fcolor {

/// The f-core: induced subgraph on {v : d(v) = f(v) * delta_f} plus the
/// structural flags the classifier rules quantify over.
struct CoreInfo {
    std::vector<int> members;       // sorted original vertex indices
    Graph core_graph;               // on 0..members.size()-1, members[i] <-> i
    int max_core_degree = 0;
    bool is_forest = false;
    bool all_components_unicyclic_or_tree = false;
    bool is_two_regular = false;    // nonempty and every member has core-degree 2
};

class EmptyGraphError : public std::runtime_error {
public:
    EmptyGraphError() : std::runtime_error("graph has no edges (delta_f = 0)") {}
};

class PreconditionFailed : public std::runtime_error {
public:
    explicit PreconditionFailed(const std::string& what) : std::runtime_error(what) {}
};

/// Requires delta_f >= 1; throws EmptyGraphError otherwise.
CoreInfo f_core(const FInstance& inst);

/// Two-sided partition. side[v] is 0 (side A) or 1; the lowest-index
/// vertex of each connected component lands on side A.
struct Bipartition {
    std::vector<int> side;
};

std::optional<Bipartition> is_bipartite(const Graph& g);

/// Induced K_{1,3}: a center and three pairwise non-adjacent neighbors.
struct ClawWitness {
    int center = 0;
    std::array<int, 3> leaves{};
};

/// Empty when g is claw-free; otherwise the lexicographically smallest
/// witness (by center, then leaf triple).
std::optional<ClawWitness> find_claw(const Graph& g);

inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

enum class CutKind { Matching, Star };

/// An edge cut of size <= delta_f - 2 that is a matching or a star.
struct CutWitness {
    std::vector<Edge> cut_edges;
    CutKind kind = CutKind::Star;
    std::optional<int> star_center;
    std::vector<int> side_x;  // contains the star center when kind == Star
    std::vector<int> side_y;
};

/// Exhaustive star-cut search (per-vertex component analysis plus
/// bridges). Requires inst connected and delta_f >= 3; returns the
/// smallest cut found, ties broken by lowest center index.
std::optional<CutWitness> find_star_cut(const FInstance& inst);

struct MatchingCutResult {
    std::optional<CutWitness> witness;
    bool budget_exhausted = false;
    std::uint64_t nodes_expanded = 0;
};

/// Branch-and-bound over vertex bipartitions; sound but incomplete once
/// `budget` search nodes are expanded. Requires inst connected and
/// delta_f >= 3.
MatchingCutResult find_matching_cut(const FInstance& inst, std::uint64_t budget = 1000000);

/// Removing the witness edges must strictly increase the component count.
bool cut_disconnects(const Graph& g, const std::vector<Edge>& cut);

/// True iff inst is the 5-wheel with f = 2 at the hub and f = 1 on the
/// rim (the exceptional graph of the claw-free rule).
bool is_graph_w(const FInstance& inst);

}  // namespace fcolor
