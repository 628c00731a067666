#include "fcolor/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace fcolor {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> tokenize(const std::string& line) {
    std::string clean = line;
    auto hash = clean.find('#');
    if (hash != std::string::npos) clean.erase(hash);
    std::istringstream is(clean);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

long parse_int(const std::string& tok, int line) {
    size_t used = 0;
    long val = 0;
    try {
        val = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
    return val;
}

}  // namespace

FInstance parse_fgr(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<int> f;
    std::vector<Edge> edges;
    std::vector<int> edge_lines;
    bool have_f = false;

    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate header");
            if (toks.size() != 4 || toks[1] != "fgraph")
                throw ParseError(lineno, "expected 'p fgraph <n> <m>'");
            n = static_cast<int>(parse_int(toks[2], lineno));
            m = static_cast<int>(parse_int(toks[3], lineno));
            if (n < 0 || m < 0) throw ParseError(lineno, "negative header counts");
        } else if (toks[0] == "f") {
            if (n < 0) throw ParseError(lineno, "'f' line before header");
            if (have_f) throw ParseError(lineno, "duplicate 'f' line");
            if (static_cast<int>(toks.size()) - 1 != n)
                throw ParseError(lineno, "'f' line must carry n = " + std::to_string(n) +
                                             " values");
            for (int i = 1; i <= n; ++i)
                f.push_back(static_cast<int>(parse_int(toks[static_cast<size_t>(i)], lineno)));
            have_f = true;
        } else if (toks[0] == "e") {
            if (!have_f) throw ParseError(lineno, "'e' line before 'f' line");
            if (toks.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
            long u = parse_int(toks[1], lineno);
            long v = parse_int(toks[2], lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex out of range 1.." + std::to_string(n));
            edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
            edge_lines.push_back(lineno);
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing 'p fgraph' header");
    if (!have_f) throw ParseError(lineno, "missing 'f' line");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(lineno, "header announces " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    try {
        return build_instance(n, edges, f);
    } catch (const BuildError& err) {
        int where = lineno;
        if (err.code() == BuildErrc::LoopEdge || err.code() == BuildErrc::DuplicateEdge ||
            err.code() == BuildErrc::VertexOutOfRange)
            where = edge_lines[static_cast<size_t>(err.index())];
        throw ParseError(where, err.what());
    }
}

std::string serialize_fgr(const FInstance& inst) {
    std::ostringstream os;
    const Graph& g = inst.graph();
    os << "p fgraph " << g.vertex_count() << " " << g.edge_count() << "\n";
    os << "f";
    for (int v = 0; v < g.vertex_count(); ++v) os << " " << inst.f_of(v);
    os << "\n";
    for (const Edge& e : g.edges()) os << "e " << e.u + 1 << " " << e.v + 1 << "\n";
    return os.str();
}

namespace {

std::vector<int> parse_f_spec(const std::string& spec, int n, const Graph& g) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw FamilyError("bad f spec: " + spec);
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    std::vector<int> f(static_cast<size_t>(n), 1);
    if (kind == "const") {
        int k = std::stoi(rest);
        std::fill(f.begin(), f.end(), k);
    } else if (kind == "hub") {
        int k = std::stoi(rest);
        int hub = 0;
        for (int v = 1; v < n; ++v)
            if (g.degree(v) > g.degree(hub)) hub = v;
        f[static_cast<size_t>(hub)] = k;
    } else if (kind == "list") {
        std::istringstream is(rest);
        std::string tok;
        f.clear();
        while (std::getline(is, tok, ',')) f.push_back(std::stoi(tok));
        if (static_cast<int>(f.size()) != n)
            throw FamilyError("f list must carry " + std::to_string(n) + " values");
    } else {
        throw FamilyError("unknown f spec kind: " + kind);
    }
    return f;
}

long need_param(const std::vector<std::string>& params, size_t i, const std::string& family) {
    if (i >= params.size()) throw FamilyError(family + ": missing parameter");
    try {
        return std::stol(params[i]);
    } catch (const std::exception&) {
        throw FamilyError(family + ": bad parameter '" + params[i] + "'");
    }
}

}  // namespace

FInstance gen_family(const std::string& name, const std::vector<std::string>& params,
                     const std::string& f_spec) {
    int n = 0;
    std::vector<Edge> edges;
    if (name == "cycle") {
        n = static_cast<int>(need_param(params, 0, name));
        if (n < 3) throw FamilyError("cycle needs n >= 3");
        for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    } else if (name == "path") {
        n = static_cast<int>(need_param(params, 0, name));
        if (n < 1) throw FamilyError("path needs n >= 1");
        for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    } else if (name == "complete") {
        n = static_cast<int>(need_param(params, 0, name));
        if (n < 1) throw FamilyError("complete needs n >= 1");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    } else if (name == "complete_bipartite") {
        int a = static_cast<int>(need_param(params, 0, name));
        int b = static_cast<int>(need_param(params, 1, name));
        if (a < 1 || b < 1) throw FamilyError("complete_bipartite needs a,b >= 1");
        n = a + b;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    } else if (name == "wheel") {
        // Hub 0 joined to the rim cycle 1..n.
        int rim = static_cast<int>(need_param(params, 0, name));
        if (rim < 3) throw FamilyError("wheel needs rim >= 3");
        n = rim + 1;
        for (int i = 1; i <= rim; ++i) {
            edges.push_back({0, i});
            edges.push_back({i, i % rim + 1});
        }
    } else if (name == "star") {
        int leaves = static_cast<int>(need_param(params, 0, name));
        if (leaves < 1) throw FamilyError("star needs leaves >= 1");
        n = leaves + 1;
        for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    } else if (name == "petersen") {
        n = 10;
        for (int i = 0; i < 5; ++i) {
            edges.push_back({i, (i + 1) % 5});          // outer C5
            edges.push_back({i, i + 5});                // spokes
            edges.push_back({i + 5, (i + 2) % 5 + 5});  // inner pentagram
        }
    } else if (name == "random") {
        n = static_cast<int>(need_param(params, 0, name));
        if (params.size() < 3) throw FamilyError("random: missing parameter");
        double p = 0.0;
        try {
            p = std::stod(params[1]);
        } catch (const std::exception&) {
            throw FamilyError("random: bad probability '" + params[1] + "'");
        }
        auto seed = static_cast<std::uint64_t>(need_param(params, 2, name));
        if (n < 1 || p < 0.0 || p > 1.0)
            throw FamilyError("random needs n >= 1 and edge probability in [0,1]");
        SeededRng rng(seed);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.next_unit() < p) edges.push_back({i, j});
    } else if (name == "graph_w") {
        // 5-wheel, f = 2 at the hub, f = 1 on the rim.
        n = 6;
        for (int i = 1; i <= 5; ++i) {
            edges.push_back({0, i});
            edges.push_back({i, i % 5 + 1});
        }
        std::vector<int> f{2, 1, 1, 1, 1, 1};
        return build_instance(n, edges, f);
    } else {
        throw FamilyError("unknown family: " + name);
    }
    // Build once to expose degrees to hub: f specs.
    FInstance skeleton = build_instance(n, edges, std::vector<int>(static_cast<size_t>(n), 1));
    std::vector<int> f = parse_f_spec(f_spec.empty() ? "const:1" : f_spec, n, skeleton.graph());
    return build_instance(n, edges, f);
}

std::string coloring_to_json(const FInstance& inst, const FColoring& col) {
    ordered_json j;
    j["k"] = col.k;
    j["edges"] = ordered_json::array();
    for (int i = 0; i < inst.graph().edge_count(); ++i) {
        const Edge& e = inst.graph().edge(i);
        j["edges"].push_back({e.u + 1, e.v + 1, col.color[static_cast<size_t>(i)]});
    }
    return j.dump() + "\n";
}

FColoring coloring_from_json(const FInstance& inst, const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    FColoring col;
    col.k = j.at("k").get<int>();
    col.color.assign(static_cast<size_t>(inst.graph().edge_count()), 0);
    std::vector<char> seen(static_cast<size_t>(inst.graph().edge_count()), 0);
    for (const auto& entry : j.at("edges")) {
        int u = entry.at(0).get<int>() - 1;
        int v = entry.at(1).get<int>() - 1;
        int c = entry.at(2).get<int>();
        int idx = (u >= 0 && u < inst.graph().vertex_count() && v >= 0 &&
                   v < inst.graph().vertex_count())
                      ? inst.graph().edge_index(u, v)
                      : -1;
        if (idx < 0)
            throw CoverageMismatch("coloring names edge " + std::to_string(u + 1) + "-" +
                                   std::to_string(v + 1) + " absent from the instance");
        if (seen[static_cast<size_t>(idx)])
            throw CoverageMismatch("coloring assigns edge " + std::to_string(u + 1) + "-" +
                                   std::to_string(v + 1) + " twice");
        seen[static_cast<size_t>(idx)] = 1;
        col.color[static_cast<size_t>(idx)] = c;
    }
    for (int i = 0; i < inst.graph().edge_count(); ++i) {
        if (!seen[static_cast<size_t>(i)]) {
            const Edge& e = inst.graph().edge(i);
            throw CoverageMismatch("coloring misses edge " + std::to_string(e.u + 1) + "-" +
                                   std::to_string(e.v + 1));
        }
    }
    return col;
}

namespace {

ordered_json verdict_json(const FInstance& inst, const Verdict& v, bool include_witness) {
    ordered_json j;
    j["class"] = class_name(v.klass);
    j["rule"] = rule_name(v.rule);
    j["delta_f"] = v.delta_f;
    j["n"] = inst.graph().vertex_count();
    j["m"] = inst.graph().edge_count();
    if (v.witness) {
        j["colors"] = v.witness->k;
        if (include_witness) {
            ordered_json w = ordered_json::array();
            for (int i = 0; i < inst.graph().edge_count(); ++i) {
                const Edge& e = inst.graph().edge(i);
                w.push_back({e.u + 1, e.v + 1, v.witness->color[static_cast<size_t>(i)]});
            }
            j["witness"] = std::move(w);
        }
    } else {
        j["colors"] = nullptr;
    }
    if (v.cut) {
        ordered_json c;
        c["kind"] = v.cut->kind == CutKind::Star ? "star" : "matching";
        ordered_json ce = ordered_json::array();
        for (const Edge& e : v.cut->cut_edges) ce.push_back({e.u + 1, e.v + 1});
        c["edges"] = std::move(ce);
        if (v.cut->star_center) c["center"] = *v.cut->star_center + 1;
        j["cut"] = std::move(c);
    }
    j["exhausted_at_delta_f"] = v.exhausted_at_delta_f;
    j["search_nodes"] = v.search_nodes;
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

}  // namespace

std::string verdict_to_json(const FInstance& inst, const Verdict& v, bool include_witness) {
    return verdict_json(inst, v, include_witness).dump(2) + "\n";
}

std::string aggregate_to_json(const FInstance& inst, const AggregateVerdict& v,
                              bool include_witness) {
    ordered_json j;
    j["class"] = class_name(v.klass);
    j["delta_f"] = v.delta_f;
    j["components"] = ordered_json::array();
    for (const auto& cv : v.components) {
        ordered_json c = verdict_json(cv.instance, cv.verdict, include_witness);
        ordered_json verts = ordered_json::array();
        for (int x : cv.vertices) verts.push_back(x + 1);
        c["vertices"] = std::move(verts);
        j["components"].push_back(std::move(c));
    }
    return j.dump(2) + "\n";
}

std::string export_dot(const FInstance& inst, const FColoring* col) {
    static const char* kPalette[12] = {
        "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
        "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff"};
    std::ostringstream os;
    os << "graph fcolor {\n";
    os << "  node [shape=circle];\n";
    for (int v = 0; v < inst.graph().vertex_count(); ++v)
        os << "  " << v + 1 << " [label=\"" << v + 1 << "\\nf=" << inst.f_of(v) << "\"];\n";
    for (int i = 0; i < inst.graph().edge_count(); ++i) {
        const Edge& e = inst.graph().edge(i);
        os << "  " << e.u + 1 << " -- " << e.v + 1;
        if (col) {
            int c = col->color[static_cast<size_t>(i)];
            os << " [color=\"" << kPalette[(c - 1) % 12] << "\", label=\"" << c << "\"]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace fcolor
