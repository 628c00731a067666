#include "fcolor/coloring.hpp"

#include <algorithm>
#include <set>

namespace fcolor {

int FColoring::colors_used() const {
    std::set<int> used;
    for (int c : color)
        if (c > 0) used.insert(c);
    return static_cast<int>(used.size());
}

bool FColoring::fully_assigned() const {
    return std::all_of(color.begin(), color.end(), [](int c) { return c > 0; });
}

std::vector<std::vector<int>> color_counts(const FInstance& inst, const FColoring& col) {
    const Graph& g = inst.graph();
    std::vector<std::vector<int>> counts(static_cast<size_t>(g.vertex_count()),
                                         std::vector<int>(static_cast<size_t>(col.k) + 1, 0));
    for (int i = 0; i < g.edge_count(); ++i) {
        int c = col.color[static_cast<size_t>(i)];
        if (c == 0) continue;
        const Edge& e = g.edge(i);
        ++counts[static_cast<size_t>(e.u)][static_cast<size_t>(c)];
        ++counts[static_cast<size_t>(e.v)][static_cast<size_t>(c)];
    }
    return counts;
}

VerifyReport verify_coloring(const FInstance& inst, const FColoring& col) {
    const Graph& g = inst.graph();
    if (static_cast<int>(col.color.size()) != g.edge_count())
        throw CoverageMismatch("assignment covers " + std::to_string(col.color.size()) +
                               " edges, instance has " + std::to_string(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i) {
        int c = col.color[static_cast<size_t>(i)];
        if (c < 1 || c > col.k)
            throw CoverageMismatch("edge " + std::to_string(i) + " has no color in 1.." +
                                   std::to_string(col.k));
    }
    VerifyReport report;
    auto counts = color_counts(inst, col);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int c = 1; c <= col.k; ++c) {
            int cnt = counts[static_cast<size_t>(v)][static_cast<size_t>(c)];
            if (cnt > inst.f_of(v))
                report.violations.push_back({v, c, cnt, inst.f_of(v)});
        }
    }
    report.ok = report.violations.empty();
    return report;
}

FColoring compact_colors(const FColoring& col) {
    std::set<int> used;
    for (int c : col.color)
        if (c > 0) used.insert(c);
    std::vector<int> remap(static_cast<size_t>(col.k) + 1, 0);
    int next = 0;
    for (int c : used) remap[static_cast<size_t>(c)] = ++next;
    FColoring out;
    out.k = next;
    out.color.reserve(col.color.size());
    for (int c : col.color) out.color.push_back(c > 0 ? remap[static_cast<size_t>(c)] : 0);
    return out;
}

}  // namespace fcolor
