#pragma once

#include <string>
#include <vector>

#include "fcolor/instance.hpp"

namespace fcolor {

/// Edge coloring keyed by edge index. color[i] in 1..k; 0 marks an
/// unassigned edge (only the extension operation works with partials).
struct FColoring {
    int k = 0;
    std::vector<int> color;

    int colors_used() const;
    bool fully_assigned() const;
};

struct Violation {
    int vertex = 0;
    int color = 0;
    int count = 0;
    int limit = 0;  // f(vertex)
};

struct VerifyReport {
    bool ok = false;
    std::vector<Violation> violations;
};

class CoverageMismatch : public std::runtime_error {
public:
    explicit CoverageMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Checks that every vertex sees each color at most f(v) times. Throws
/// CoverageMismatch unless the assignment covers exactly E(inst).
VerifyReport verify_coloring(const FInstance& inst, const FColoring& col);

/// Per-vertex color counts, counts[v][c] for c in 0..k.
std::vector<std::vector<int>> color_counts(const FInstance& inst, const FColoring& col);

/// Renumber the used colors to 1..k' preserving order; k becomes k'.
FColoring compact_colors(const FColoring& col);

}  // namespace fcolor
