#include "doctest.h"
#include "fcolor/classify.hpp"
#include "helpers.hpp"

using namespace fcolor;

namespace {

void expect_class1_with_witness(const FInstance& inst, const Verdict& v) {
    CHECK(v.klass == GClass::Class1);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->k == inst.delta_f());
    CHECK(verify_coloring(inst, *v.witness).ok);
}

}  // namespace

TEST_CASE("classify: K33 is Class 1 by the bipartite rule") {
    FInstance inst = testutil::family("complete_bipartite", {"3", "3"});
    Verdict v = classify(inst);
    CHECK(v.rule == Rule::Bipartite);
    expect_class1_with_witness(inst, v);
    CHECK(v.witness->k == 3);
}

TEST_CASE("classify: K5 with f=2 is Class 1 by the even-f rule") {
    FInstance inst = testutil::family("complete", {"5"}, "const:2");
    Verdict v = classify(inst);
    CHECK(v.rule == Rule::EvenF);
    expect_class1_with_witness(inst, v);
    CHECK(v.witness->k == 2);
}

TEST_CASE("classify: K5 with f=3 is Class 1 by the empty-core rule") {
    // Not bipartite, f odd, and no vertex attains d = 3 * delta_f.
    FInstance inst = testutil::family("complete", {"5"}, "const:3");
    Verdict v = classify(inst);
    CHECK(v.rule == Rule::EmptyCore);
    expect_class1_with_witness(inst, v);
}

TEST_CASE("classify: triangle with a pendant fires the unicyclic-core rule") {
    FInstance inst = testutil::make1(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    Verdict v = classify(inst);
    CHECK(v.rule == Rule::CoreUnicyclic);
    expect_class1_with_witness(inst, v);
}

TEST_CASE("classify: C5 with pendants fires the degree-2 necessary-condition rule") {
    // C5 on 0..4 plus one pendant at each cycle vertex: core is the C5
    // (2-regular) but the pendants have d = 1, not f*delta_f - 1 = 2.
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + i});
    FInstance inst = testutil::make1(10, edges);
    CHECK(inst.delta_f() == 3);
    Verdict v = classify(inst);
    CHECK(v.rule == Rule::CoreDeg2Necessary);
    expect_class1_with_witness(inst, v);
}

TEST_CASE("classify: C5 is Class 2 by exhaustive search") {
    FInstance inst = testutil::family("cycle", {"5"});
    Verdict v = classify(inst);
    CHECK(v.klass == GClass::Class2);
    CHECK(v.rule == Rule::Exact);
    CHECK(v.exhausted_at_delta_f);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->k == inst.delta_f() + 1);
    CHECK(verify_coloring(inst, *v.witness).ok);
}

TEST_CASE("classify: the exceptional wheel is Class 2") {
    FInstance inst = testutil::family("graph_w");
    Verdict v = classify(inst);
    CHECK(v.klass == GClass::Class2);
    CHECK(v.rule == Rule::Exact);
    CHECK(v.delta_f == 3);
}

TEST_CASE("classify: Petersen is Class 2") {
    Verdict v = classify(testutil::family("petersen"));
    CHECK(v.klass == GClass::Class2);
    CHECK(v.rule == Rule::Exact);
}

TEST_CASE("classify: beyond the exact limit yields Unknown") {
    FInstance inst = testutil::family("petersen");
    ClassifyOptions opts;
    opts.exact_edge_limit = 5;
    Verdict v = classify(inst, opts);
    CHECK(v.klass == GClass::Unknown);
    CHECK(v.rule == Rule::None);
    CHECK_FALSE(v.rule_trace.empty());
}

TEST_CASE("classify rejects empty or disconnected input") {
    CHECK_THROWS_AS(classify(testutil::make1(3, {})), EmptyGraphError);
    CHECK_THROWS_AS(classify(testutil::make1(4, {{0, 1}, {2, 3}})), DisconnectedError);
}

TEST_CASE("classify_any aggregates per component") {
    // C5 together with C6: the C5 component is Class 2 at the global delta_f.
    std::vector<Edge> e1{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                         {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}, {5, 10}};
    AggregateVerdict a1 = classify_any(testutil::make1(11, e1));
    CHECK(a1.klass == GClass::Class2);
    CHECK(a1.delta_f == 2);
    CHECK(a1.components.size() == 2);

    // C6 together with C8: both even, Class 1.
    std::vector<Edge> e2;
    for (int i = 0; i < 6; ++i) e2.push_back({std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6)});
    for (int i = 0; i < 8; ++i)
        e2.push_back({6 + std::min(i, (i + 1) % 8), 6 + std::max(i, (i + 1) % 8)});
    CHECK(classify_any(testutil::make1(14, e2)).klass == GClass::Class1);

    // C5 together with K_{1,3}: global delta_f 3 comes from the star;
    // the C5 sits below it, so the aggregate is Class 1.
    std::vector<Edge> e3{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {5, 6}, {5, 7}, {5, 8}};
    AggregateVerdict a3 = classify_any(testutil::make1(9, e3));
    CHECK(a3.delta_f == 3);
    CHECK(a3.klass == GClass::Class1);
}

TEST_CASE("explain covers the three verdict shapes") {
    std::string c1 = explain(classify(testutil::family("complete_bipartite", {"3", "3"})));
    CHECK(c1.find("f-Class 1") != std::string::npos);
    CHECK(c1.find("BIPARTITE") != std::string::npos);

    std::string c2 = explain(classify(testutil::family("cycle", {"5"})));
    CHECK(c2.find("f-Class 2") != std::string::npos);
    CHECK(c2.find("exhausted") != std::string::npos);

    ClassifyOptions opts;
    opts.exact_edge_limit = 5;
    std::string c3 = explain(classify(testutil::family("petersen"), opts));
    CHECK(c3.find("Unknown") != std::string::npos);
    CHECK(c3.find("miss") != std::string::npos);
}
