#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fcolor/classify.hpp"
#include "fcolor/coloring.hpp"
#include "fcolor/instance.hpp"

namespace fcolor {

/// Parse failure with a 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Line-oriented instance format, 1-based vertices, '#' comments:
///   p fgraph <n> <m>
///   f <f_1> ... <f_n>
///   e <u> <v>      (m lines)
FInstance parse_fgr(const std::string& text);
std::string serialize_fgr(const FInstance& inst);

class FamilyError : public std::runtime_error {
public:
    explicit FamilyError(const std::string& what) : std::runtime_error(what) {}
};

/// Named instance generators. Families: cycle n | path n | complete n |
/// complete_bipartite a b | wheel n | petersen | star n |
/// random n p seed (p in [0,1]) | graph_w. f_spec: "const:k", "list:v1,..,vn",
/// "hub:k". The random family uses a fixed 64-bit linear congruential
/// generator (see seeded_rng) so outputs are reproducible.
FInstance gen_family(const std::string& name, const std::vector<std::string>& params,
                     const std::string& f_spec);

/// MMIX linear congruential step: s <- s*6364136223846793005 +
/// 1442695040888963407. Uniform [0,1) from the top 53 bits.
struct SeededRng {
    std::uint64_t state;
    explicit SeededRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

/// Coloring as JSON: {"k":K,"edges":[[u,v,c],...]}, 1-based, edges in
/// canonical order. Byte-stable for fixed input.
std::string coloring_to_json(const FInstance& inst, const FColoring& col);
FColoring coloring_from_json(const FInstance& inst, const std::string& text);

/// Verdict as JSON with fixed key order (byte-stable).
std::string verdict_to_json(const FInstance& inst, const Verdict& v, bool include_witness = true);
std::string aggregate_to_json(const FInstance& inst, const AggregateVerdict& v,
                              bool include_witness = true);

/// DOT export; when a coloring is given edges carry colors from a fixed
/// 12-entry palette, cycling beyond 12.
std::string export_dot(const FInstance& inst, const FColoring* col = nullptr);

}  // namespace fcolor
