#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fcolor/engine.hpp"

namespace fcolor {

class TooLarge : public std::runtime_error {
public:
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

class InternalInconsistency : public std::runtime_error {
public:
    explicit InternalInconsistency(const std::string& what) : std::runtime_error(what) {}
};

struct OracleResult {
    int chi_f = 0;  // always delta_f or delta_f + 1
    FColoring witness;
    std::uint64_t nodes_expanded = 0;
    bool exhausted_at_delta_f = false;
};

inline constexpr int kOracleEdgeCap = 30;

/// Exact f-chromatic index by full exhaustion at k = delta_f. Requires
/// at least one edge and at most kOracleEdgeCap edges.
OracleResult exact_chi_f(const FInstance& inst);

/// Connected, f-Class 2, and deleting any edge lowers chi'_f (each
/// deleted-edge instance is re-solved against its own delta_f).
bool is_f_critical(const FInstance& inst);

/// All connected non-isomorphic graphs with 1..max_n vertices, canonical
/// deduplication by minimum adjacency encoding. max_n <= 8.
std::vector<Graph> enumerate_connected_graphs(int max_n);

/// Canonical key of a small graph: minimum upper-triangle bit string
/// over all degree-preserving vertex permutations. Requires n <= 8.
std::uint64_t canonical_key(const Graph& g);

/// f-value pattern applied to a concrete graph. Supported specs:
/// "const:k" and "hub:k" (k on the lowest-index max-degree vertex, 1
/// elsewhere).
std::vector<int> apply_f_pattern(const Graph& g, const std::string& pattern);

/// Streams enumerate_connected_graphs(max_n) crossed with the given f
/// patterns.
void enumerate_instances(int max_n, const std::vector<std::string>& f_patterns,
                         const std::function<void(const FInstance&)>& sink);

}  // namespace fcolor
