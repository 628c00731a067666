#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcolor/engine.hpp"

namespace fcolor {

enum class GClass { Class1, Class2, Unknown };

enum class Rule {
    Bipartite,          // R1
    EvenF,              // R2
    EmptyCore,          // R3
    CoreUnicyclic,      // R4
    CoreDeg2Necessary,  // R5
    SmallCut,           // R6
    ClawFree,           // R7
    Exact,              // R8
    None,               // R9: no rule applied
};

const char* rule_name(Rule r);
const char* class_name(GClass c);

struct Verdict {
    GClass klass = GClass::Unknown;
    Rule rule = Rule::None;
    int delta_f = 0;
    /// Class1: a valid delta_f-coloring. Class2: the (delta_f+1)-coloring
    /// from upper_color_f, attached alongside the exhaustion token.
    std::optional<FColoring> witness;
    /// Class2 proof token: the delta_f search tree was fully exhausted.
    bool exhausted_at_delta_f = false;
    std::uint64_t search_nodes = 0;
    std::optional<CutWitness> cut;        // set when SmallCut fired
    std::vector<std::string> rule_trace;  // per-rule hit/miss reasons
    std::string notes;
};

struct ClassifyOptions {
    int exact_edge_limit = 24;
    std::uint64_t cut_budget = 1000000;
    /// Node budget for producing witness colorings under rules whose
    /// soundness guarantees one exists (0 = unlimited).
    std::uint64_t witness_budget = 10000000;
};

class DisconnectedError : public std::runtime_error {
public:
    DisconnectedError() : std::runtime_error("instance is not connected; use classify_any") {}
};

/// Applies the sufficient-condition rules in order R1..R8; first hit
/// wins. Requires inst connected with at least one edge.
Verdict classify(const FInstance& inst, const ClassifyOptions& opts = {});

struct ComponentVerdict {
    std::vector<int> vertices;  // original vertex indices of the component
    FInstance instance;
    Verdict verdict;
};

struct AggregateVerdict {
    GClass klass = GClass::Unknown;
    int delta_f = 0;  // global delta_f = max over components
    std::vector<ComponentVerdict> components;
};

/// Classifies each connected component against its own delta_f. The
/// aggregate is Class1 iff every component attaining the global delta_f
/// is Class1 (smaller components always fit within the global bound).
AggregateVerdict classify_any(const FInstance& inst, const ClassifyOptions& opts = {});

/// Human-readable trace: rule fired, witness summary, per-rule miss
/// reasons.
std::string explain(const Verdict& v);

}  // namespace fcolor
