#include "doctest.h"
#include "fcolor/structure.hpp"
#include "helpers.hpp"

using namespace fcolor;

TEST_CASE("f_core: C5 with f=1 is its own 2-regular core") {
    CoreInfo core = f_core(testutil::family("cycle", {"5"}));
    CHECK(core.members == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(core.is_two_regular);
    CHECK(core.max_core_degree == 2);
    CHECK_FALSE(core.is_forest);
    CHECK(core.all_components_unicyclic_or_tree);
}

TEST_CASE("f_core: star with hub f=2 has empty core") {
    CoreInfo core = f_core(testutil::family("star", {"5"}, "hub:2"));
    CHECK(core.members.empty());
    CHECK_FALSE(core.is_two_regular);
}

TEST_CASE("f_core: triangle with a pendant has a one-vertex forest core") {
    FInstance inst = testutil::make1(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    CHECK(inst.delta_f() == 3);
    CoreInfo core = f_core(inst);
    CHECK(core.members == std::vector<int>{0});
    CHECK(core.is_forest);
    CHECK(core.all_components_unicyclic_or_tree);
    CHECK_FALSE(core.is_two_regular);
}

TEST_CASE("f_core rejects edgeless instances") {
    CHECK_THROWS_AS(f_core(testutil::make1(2, {})), EmptyGraphError);
}

TEST_CASE("is_bipartite") {
    FInstance c6 = testutil::family("cycle", {"6"});
    auto part = is_bipartite(c6.graph());
    REQUIRE(part.has_value());
    CHECK(part->side[0] == 0);
    for (const Edge& e : c6.graph().edges())
        CHECK(part->side[static_cast<size_t>(e.u)] != part->side[static_cast<size_t>(e.v)]);

    CHECK_FALSE(is_bipartite(testutil::family("cycle", {"5"}).graph()).has_value());

    auto empty = is_bipartite(testutil::make1(3, {}).graph());
    REQUIRE(empty.has_value());
    CHECK(empty->side == std::vector<int>{0, 0, 0});
}

TEST_CASE("find_claw") {
    auto w = find_claw(testutil::family("star", {"3"}).graph());
    REQUIRE(w.has_value());
    CHECK(w->center == 0);
    CHECK(w->leaves == std::array<int, 3>{1, 2, 3});

    CHECK(is_claw_free(testutil::family("cycle", {"6"}).graph()));
    CHECK(is_claw_free(testutil::family("complete", {"4"}).graph()));
    CHECK_FALSE(is_claw_free(testutil::family("star", {"5"}).graph()));
    // Petersen is triangle-free with degree-3 vertices, so every vertex
    // centers an induced claw.
    FInstance pet = testutil::family("petersen");
    auto pw = find_claw(pet.graph());
    REQUIRE(pw.has_value());
    CHECK(pw->center == 0);
}

namespace {

// Two K4 blocks joined by a single bridge edge.
FInstance two_k4_bridge() {
    std::vector<Edge> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) edges.push_back({u, v});
    for (int u = 4; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) edges.push_back({u, v});
    edges.push_back({3, 4});
    return testutil::make1(8, edges);
}

// Two K5 blocks joined by two vertex-disjoint edges.
FInstance two_k5_matching() {
    std::vector<Edge> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) edges.push_back({u, v});
    for (int u = 5; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) edges.push_back({u, v});
    edges.push_back({3, 5});
    edges.push_back({4, 6});
    return testutil::make1(10, edges);
}

}  // namespace

TEST_CASE("find_star_cut finds a bridge between two K4 blocks") {
    FInstance inst = two_k4_bridge();
    CHECK(inst.delta_f() == 4);
    auto cut = find_star_cut(inst);
    REQUIRE(cut.has_value());
    CHECK(cut->kind == CutKind::Star);
    CHECK(cut->cut_edges == std::vector<Edge>{{3, 4}});
    CHECK(cut_disconnects(inst.graph(), cut->cut_edges));
}

TEST_CASE("find_star_cut preconditions and misses") {
    CHECK_THROWS_AS(find_star_cut(testutil::family("cycle", {"5"})), PreconditionFailed);
    CHECK_FALSE(find_star_cut(testutil::family("complete", {"4"})).has_value());
}

TEST_CASE("find_matching_cut separates two K5 blocks") {
    FInstance inst = two_k5_matching();
    CHECK(inst.delta_f() == 5);
    MatchingCutResult res = find_matching_cut(inst);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->kind == CutKind::Matching);
    CHECK(res.witness->cut_edges.size() <= 3);
    // Pairwise vertex-disjoint.
    for (size_t i = 0; i < res.witness->cut_edges.size(); ++i)
        for (size_t j = i + 1; j < res.witness->cut_edges.size(); ++j) {
            const Edge& a = res.witness->cut_edges[i];
            const Edge& b = res.witness->cut_edges[j];
            CHECK(a.u != b.u);
            CHECK(a.u != b.v);
            CHECK(a.v != b.u);
            CHECK(a.v != b.v);
        }
    CHECK(cut_disconnects(inst.graph(), res.witness->cut_edges));
}

TEST_CASE("find_matching_cut preconditions and misses") {
    CHECK_THROWS_AS(find_matching_cut(testutil::family("cycle", {"6"})), PreconditionFailed);
    CHECK_FALSE(find_matching_cut(testutil::family("complete", {"4"})).witness.has_value());
}

TEST_CASE("is_graph_w") {
    CHECK(is_graph_w(testutil::family("graph_w")));
    CHECK_FALSE(is_graph_w(testutil::family("wheel", {"5"})));
    CHECK_FALSE(is_graph_w(testutil::family("complete", {"4"})));
}
