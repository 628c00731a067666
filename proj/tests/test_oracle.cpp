#include "doctest.h"
#include "fcolor/oracle.hpp"
#include "helpers.hpp"

using namespace fcolor;

TEST_CASE("exact_chi_f anchors") {
    OracleResult c5 = exact_chi_f(testutil::family("cycle", {"5"}));
    CHECK(c5.chi_f == 3);
    CHECK(c5.exhausted_at_delta_f);
    CHECK(c5.witness.k == 3);
    CHECK(verify_coloring(testutil::family("cycle", {"5"}), c5.witness).ok);

    CHECK(exact_chi_f(testutil::family("cycle", {"6"})).chi_f == 2);
    CHECK(exact_chi_f(testutil::family("complete", {"4"})).chi_f == 3);
    CHECK(exact_chi_f(testutil::family("graph_w")).chi_f == 4);
    CHECK(exact_chi_f(testutil::family("petersen")).chi_f == 4);
}

TEST_CASE("exact_chi_f guards") {
    CHECK_THROWS_AS(exact_chi_f(testutil::make1(2, {})), EmptyGraphError);
    CHECK_THROWS_AS(exact_chi_f(testutil::family("complete", {"9"})), TooLarge);
}

TEST_CASE("is_f_critical") {
    CHECK(is_f_critical(testutil::family("cycle", {"5"})));
    CHECK_FALSE(is_f_critical(testutil::family("cycle", {"6"})));
    // C5 plus a pendant: delta_f rises to 3 and the instance turns Class 1.
    FInstance pend = testutil::make1(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});
    CHECK_FALSE(is_f_critical(pend));
    // Disconnected instances are never critical.
    CHECK_FALSE(is_f_critical(testutil::make1(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("enumerate_connected_graphs counts") {
    auto upto2 = enumerate_connected_graphs(2);
    REQUIRE(upto2.size() == 2);  // K1 and K2
    CHECK(upto2[1].edge_count() == 1);

    auto upto3 = enumerate_connected_graphs(3);
    CHECK(upto3.size() == 4);  // adds P3 and K3

    auto upto4 = enumerate_connected_graphs(4);
    int on4 = 0;
    for (const Graph& g : upto4)
        if (g.vertex_count() == 4) ++on4;
    CHECK(on4 == 6);

    auto upto6 = enumerate_connected_graphs(6);
    int on5 = 0, on6 = 0;
    for (const Graph& g : upto6) {
        if (g.vertex_count() == 5) ++on5;
        if (g.vertex_count() == 6) ++on6;
    }
    CHECK(on5 == 21);
    CHECK(on6 == 112);

    CHECK_THROWS_AS(enumerate_connected_graphs(9), TooLarge);
}

TEST_CASE("canonical_key is invariant under relabeling") {
    Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph relabeled(4, {{2, 3}, {0, 2}, {0, 1}});
    CHECK(canonical_key(path) == canonical_key(relabeled));

    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_key(path) != canonical_key(star));
}

TEST_CASE("apply_f_pattern") {
    Graph star = testutil::family("star", {"3"}).graph();
    CHECK(apply_f_pattern(star, "const:2") == std::vector<int>{2, 2, 2, 2});
    CHECK(apply_f_pattern(star, "hub:3") == std::vector<int>{3, 1, 1, 1});
    CHECK_THROWS(apply_f_pattern(star, "nope:1"));
}

TEST_CASE("enumerate_instances streams the full cross product") {
    int count = 0;
    enumerate_instances(3, {"const:1", "const:2"}, [&](const FInstance& inst) {
        ++count;
        CHECK(is_connected(inst.graph()));
    });
    CHECK(count == 8);  // 4 graphs x 2 patterns
}
