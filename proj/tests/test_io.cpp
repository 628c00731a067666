#include "doctest.h"
#include "fcolor/io.hpp"
#include "helpers.hpp"

using namespace fcolor;

TEST_CASE("parse_fgr: triangle") {
    FInstance inst = parse_fgr("p fgraph 3 3\nf 1 1 1\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(inst == testutil::make1(3, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST_CASE("parse_fgr: comments, blank lines, edgeless graph") {
    FInstance inst = parse_fgr("# an empty pair\np fgraph 2 0   # header\n\nf 1 1\n");
    CHECK(inst.graph().vertex_count() == 2);
    CHECK(inst.delta_f() == 0);
}

TEST_CASE("parse_fgr: errors carry line numbers") {
    try {
        parse_fgr("p fgraph 2 1\nf 1 1\ne 1 1\n");
        FAIL("loop accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_fgr("p fgraph 2 2\nf 1 1\ne 1 2\n"), ParseError);       // missing edge
    CHECK_THROWS_AS(parse_fgr("p fgraph 2 0\nf 1\n"), ParseError);                // short f line
    CHECK_THROWS_AS(parse_fgr("junk\n"), ParseError);
}

TEST_CASE("round trip parse(serialize) over every family") {
    std::vector<FInstance> insts{
        testutil::family("cycle", {"7"}),
        testutil::family("path", {"5"}, "const:2"),
        testutil::family("complete", {"5"}, "list:1,2,1,2,1"),
        testutil::family("complete_bipartite", {"2", "4"}),
        testutil::family("wheel", {"6"}, "hub:2"),
        testutil::family("petersen"),
        testutil::family("star", {"4"}),
        testutil::family("random", {"9", "0.4", "42"}),
        testutil::family("graph_w"),
    };
    for (const FInstance& inst : insts) {
        CHECK(parse_fgr(serialize_fgr(inst)) == inst);
    }
}

TEST_CASE("gen_family specifics") {
    FInstance c5 = testutil::family("cycle", {"5"});
    CHECK(c5.graph().vertex_count() == 5);
    CHECK(c5.graph().edge_count() == 5);

    FInstance w = testutil::family("graph_w");
    CHECK(w.f() == std::vector<int>{2, 1, 1, 1, 1, 1});
    CHECK(w.graph().degree(0) == 5);

    FInstance pet = testutil::family("petersen");
    CHECK(pet.graph().vertex_count() == 10);
    CHECK(pet.graph().edge_count() == 15);
    CHECK(pet.graph().max_degree() == 3);

    // Seeded generator is reproducible.
    CHECK(serialize_fgr(testutil::family("random", {"8", "0.5", "7"})) ==
          serialize_fgr(testutil::family("random", {"8", "0.5", "7"})));
    CHECK(serialize_fgr(testutil::family("random", {"8", "0.5", "7"})) !=
          serialize_fgr(testutil::family("random", {"8", "0.5", "8"})));

    CHECK_THROWS_AS(testutil::family("moebius", {"5"}), FamilyError);
    CHECK_THROWS_AS(testutil::family("cycle", {"two"}), FamilyError);
    CHECK_THROWS_AS(testutil::family("cycle", {}), FamilyError);
}

TEST_CASE("coloring JSON round trip and stability") {
    FInstance inst = testutil::family("cycle", {"6"});
    FColoring col = upper_color_f(inst);
    std::string text = coloring_to_json(inst, col);
    CHECK(text == coloring_to_json(inst, col));
    FColoring back = coloring_from_json(inst, text);
    CHECK(back.k == col.k);
    CHECK(back.color == col.color);

    CHECK_THROWS(coloring_from_json(inst, "{\"k\":2,\"edges\":[[1,2,1]]}"));
}

TEST_CASE("verdict JSON is byte-stable") {
    FInstance inst = testutil::family("complete_bipartite", {"3", "3"});
    Verdict v = classify(inst);
    CHECK(verdict_to_json(inst, v) == verdict_to_json(inst, v));
    CHECK(verdict_to_json(inst, v).find("\"class\"") != std::string::npos);

    FInstance two = testutil::make1(4, {{0, 1}, {2, 3}});
    AggregateVerdict agg = classify_any(two);
    CHECK(aggregate_to_json(two, agg) == aggregate_to_json(two, agg));
}

TEST_CASE("export_dot") {
    FInstance inst = testutil::family("path", {"3"});
    std::string plain = export_dot(inst);
    CHECK(plain.find("graph") != std::string::npos);
    CHECK(plain.find("--") != std::string::npos);

    FColoring col = upper_color_f(inst);
    std::string colored = export_dot(inst, &col);
    CHECK(colored.find("color") != std::string::npos);
}
