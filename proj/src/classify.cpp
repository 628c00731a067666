#include "fcolor/classify.hpp"

#include <algorithm>
#include <sstream>

namespace fcolor {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::Bipartite: return "BIPARTITE";
        case Rule::EvenF: return "EVEN_F";
        case Rule::EmptyCore: return "EMPTY_CORE";
        case Rule::CoreUnicyclic: return "CORE_UNICYCLIC";
        case Rule::CoreDeg2Necessary: return "CORE_DEG2_NECESSARY";
        case Rule::SmallCut: return "SMALL_CUT";
        case Rule::ClawFree: return "CLAWFREE";
        case Rule::Exact: return "EXACT";
        case Rule::None: return "NONE";
    }
    return "NONE";
}

const char* class_name(GClass c) {
    switch (c) {
        case GClass::Class1: return "f-Class 1";
        case GClass::Class2: return "f-Class 2";
        case GClass::Unknown: return "Unknown";
    }
    return "Unknown";
}

namespace {

// Produce the delta_f witness a sufficient-condition rule promises.
void attach_witness(const FInstance& inst, const ClassifyOptions& opts, Verdict& v) {
    SearchOutcome out = search_delta_f_coloring(inst, opts.witness_budget);
    v.search_nodes = out.nodes_expanded;
    if (out.status == SearchStatus::Found) {
        v.witness = compact_colors(*out.coloring);
    } else if (out.status == SearchStatus::ProvedNone) {
        // A sound rule fired yet exhaustive search refutes it: surface the
        // contradiction instead of guessing.
        throw std::logic_error(std::string("rule ") + rule_name(v.rule) +
                               " fired but no delta_f-coloring exists");
    } else {
        v.notes = "witness search budget exhausted";
    }
}

}  // namespace

Verdict classify(const FInstance& inst, const ClassifyOptions& opts) {
    const Graph& g = inst.graph();
    if (g.edge_count() == 0) throw EmptyGraphError();
    if (!is_connected(g)) throw DisconnectedError();

    Verdict v;
    v.delta_f = inst.delta_f();
    auto miss = [&](const char* rule, const std::string& why) {
        v.rule_trace.push_back(std::string(rule) + ": miss (" + why + ")");
    };
    auto hit = [&](Rule r, const std::string& why) {
        v.rule = r;
        v.klass = GClass::Class1;
        v.rule_trace.push_back(std::string(rule_name(r)) + ": hit (" + why + ")");
    };

    // R1 BIPARTITE
    if (auto part = is_bipartite(g)) {
        hit(Rule::Bipartite, "graph is bipartite");
        FColoring w = upper_color_f(inst);
        if (w.k == inst.delta_f()) {
            v.witness = w;
        } else {
            attach_witness(inst, opts, v);
        }
        return v;
    }
    miss("BIPARTITE", "graph contains an odd cycle");

    // R2 EVEN_F
    if (std::all_of(inst.f().begin(), inst.f().end(), [](int x) { return x % 2 == 0; })) {
        hit(Rule::EvenF, "every f(v) is even");
        attach_witness(inst, opts, v);
        return v;
    }
    miss("EVEN_F", "some f(v) is odd");

    const CoreInfo core = f_core(inst);

    // R3 EMPTY_CORE
    if (core.members.empty()) {
        hit(Rule::EmptyCore, "no vertex attains d(v) = f(v)*delta_f");
        attach_witness(inst, opts, v);
        return v;
    }
    miss("EMPTY_CORE", std::to_string(core.members.size()) + " f-maximum vertices");

    // R4 CORE_UNICYCLIC (forest cores included)
    if (core.all_components_unicyclic_or_tree && !core.is_two_regular) {
        hit(Rule::CoreUnicyclic, core.is_forest ? "core is a forest and not 2-regular"
                                                : "core components are unicyclic or trees, core "
                                                  "not 2-regular");
        attach_witness(inst, opts, v);
        return v;
    }
    miss("CORE_UNICYCLIC", core.is_two_regular ? "core is 2-regular"
                                               : "some core component has two or more cycles");

    const bool small_core_degree = core.max_core_degree <= 2;

    // R5 CORE_DEG2_NECESSARY: with a low-degree 2-regular core, an
    // f-Class 2 graph must satisfy all of these; any failure forces
    // Class 1.
    if (small_core_degree && core.is_two_regular) {
        std::vector<char> in_core(static_cast<size_t>(g.vertex_count()), 0);
        for (int u : core.members) in_core[static_cast<size_t>(u)] = 1;
        std::string reason;
        if (core.members.size() < 3) {
            reason = "fewer than 3 f-maximum vertices";
        }
        for (int u = 0; reason.empty() && u < g.vertex_count(); ++u) {
            if (!in_core[static_cast<size_t>(u)] &&
                g.degree(u) != inst.f_of(u) * inst.delta_f() - 1) {
                reason = "non-core vertex " + std::to_string(u) + " has d != f*delta_f - 1";
            }
        }
        for (int u = 0; reason.empty() && u < g.vertex_count(); ++u) {
            int fmax_nb = 0;
            for (int w : g.neighbors(u))
                if (in_core[static_cast<size_t>(w)]) ++fmax_nb;
            if (fmax_nb < 2 * inst.f_of(u)) {
                reason = "vertex " + std::to_string(u) + " has fewer than 2f(v) f-maximum neighbors";
            }
        }
        if (!reason.empty()) {
            hit(Rule::CoreDeg2Necessary, reason);
            attach_witness(inst, opts, v);
            return v;
        }
        miss("CORE_DEG2_NECESSARY", "all necessary conditions hold");
    } else {
        miss("CORE_DEG2_NECESSARY", small_core_degree ? "core not 2-regular" : "core degree > 2");
    }

    // R6 SMALL_CUT
    if (small_core_degree && inst.delta_f() >= 3) {
        std::optional<CutWitness> cut = find_star_cut(inst);
        bool cut_budget_out = false;
        if (!cut) {
            MatchingCutResult mc = find_matching_cut(inst, opts.cut_budget);
            cut = mc.witness;
            cut_budget_out = mc.budget_exhausted;
        }
        if (cut) {
            hit(Rule::SmallCut, (cut->kind == CutKind::Star ? std::string("star") : "matching") +
                                    " cut of size " + std::to_string(cut->cut_edges.size()));
            v.cut = cut;
            attach_witness(inst, opts, v);
            return v;
        }
        miss("SMALL_CUT", cut_budget_out ? "matching-cut budget exhausted"
                                         : "no small matching or star cut");
    } else {
        miss("SMALL_CUT", small_core_degree ? "delta_f < 3" : "core degree > 2");
    }

    // R7 CLAWFREE
    if (small_core_degree) {
        bool some_f_ge2 =
            std::any_of(inst.f().begin(), inst.f().end(), [](int x) { return x >= 2; });
        if (!some_f_ge2) {
            miss("CLAWFREE", "f is identically 1");
        } else if (is_graph_w(inst)) {
            miss("CLAWFREE", "instance is the exceptional wheel W");
        } else if (auto claw = find_claw(g)) {
            miss("CLAWFREE", "claw at vertex " + std::to_string(claw->center));
        } else {
            hit(Rule::ClawFree, "claw-free, some f(v) >= 2, not the exceptional wheel");
            attach_witness(inst, opts, v);
            return v;
        }
    } else {
        miss("CLAWFREE", "core degree > 2");
    }

    // R8 EXACT
    if (g.edge_count() <= opts.exact_edge_limit) {
        SearchOutcome out = search_delta_f_coloring(inst, 0);
        v.search_nodes = out.nodes_expanded;
        if (out.status == SearchStatus::Found) {
            v.rule = Rule::Exact;
            v.klass = GClass::Class1;
            v.witness = compact_colors(*out.coloring);
            v.rule_trace.push_back("EXACT: hit (delta_f-coloring found by exhaustive search)");
        } else {
            v.rule = Rule::Exact;
            v.klass = GClass::Class2;
            v.exhausted_at_delta_f = true;
            v.rule_trace.push_back("EXACT: hit (search tree exhausted at delta_f)");
            FColoring upper = upper_color_f(inst);
            if (upper.k == inst.delta_f())
                throw std::logic_error("constructive upper bound contradicts search exhaustion");
            v.witness = upper;
        }
        return v;
    }
    v.rule_trace.push_back("EXACT: skipped (|E| over exact_edge_limit)");
    v.rule = Rule::None;
    v.klass = GClass::Unknown;
    return v;
}

AggregateVerdict classify_any(const FInstance& inst, const ClassifyOptions& opts) {
    if (inst.graph().edge_count() == 0) throw EmptyGraphError();
    AggregateVerdict agg;
    agg.delta_f = inst.delta_f();
    agg.klass = GClass::Class1;
    for (const auto& comp : connected_components(inst.graph())) {
        ComponentVerdict cv;
        cv.vertices = comp;
        cv.instance = induced_instance(inst, comp);
        if (cv.instance.graph().edge_count() == 0) {
            cv.verdict.klass = GClass::Class1;
            cv.verdict.rule = Rule::None;
            cv.verdict.notes = "edgeless component";
        } else {
            cv.verdict = classify(cv.instance, opts);
        }
        // Components below the global delta_f always fit within the
        // global palette (their chi'_f is at most their delta_f + 1).
        if (cv.instance.delta_f() == agg.delta_f) {
            if (cv.verdict.klass == GClass::Class2) agg.klass = GClass::Class2;
            if (cv.verdict.klass == GClass::Unknown && agg.klass != GClass::Class2)
                agg.klass = GClass::Unknown;
        }
        agg.components.push_back(std::move(cv));
    }
    return agg;
}

std::string explain(const Verdict& v) {
    std::ostringstream os;
    os << "class: " << class_name(v.klass) << "\n";
    os << "rule: " << rule_name(v.rule) << "\n";
    os << "delta_f: " << v.delta_f << "\n";
    if (v.witness)
        os << "witness: " << v.witness->k << "-coloring over " << v.witness->color.size()
           << " edges\n";
    else
        os << "witness: none\n";
    if (v.cut) {
        os << "cut: " << (v.cut->kind == CutKind::Star ? "star" : "matching") << " of size "
           << v.cut->cut_edges.size();
        if (v.cut->star_center) os << " centered at " << *v.cut->star_center;
        os << "\n";
    }
    if (v.search_nodes > 0) os << "search nodes: " << v.search_nodes << "\n";
    if (v.exhausted_at_delta_f) os << "search: exhausted at delta_f\n";
    for (const auto& line : v.rule_trace) os << "  " << line << "\n";
    if (!v.notes.empty()) os << "notes: " << v.notes << "\n";
    return os.str();
}

}  // namespace fcolor
