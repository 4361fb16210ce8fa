#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "rgd/design.hpp"
#include "rgd/develop.hpp"
#include "rgd/errors.hpp"
#include "rgd/graph.hpp"

using namespace rgd;

TEST_CASE("orbit lengths") {
    CHECK(full_orbit_length(40, 4) == 10);
    CHECK(full_orbit_length(15, 5) == 3);
    CHECK(full_orbit_length(9, 1) == 9);
    CHECK(full_orbit_length(7, 7) == 1);
    CHECK_THROWS_AS(full_orbit_length(0, 1), error);
    CHECK_THROWS_AS(full_orbit_length(5, 0), error);
}

TEST_CASE("orbits enumerate distinct translates") {
    auto full = orbit({0, 1, 2}, 9, 1);
    CHECK(full.size() == 9);
    CHECK(full.front() == Block{0, 1, 2});
    CHECK(full.back() == Block{0, 1, 8});

    // {0,10,20,30} + 4t repeats as a set after five steps, not ten.
    auto short_orbit = orbit({0, 10, 20, 30}, 40, 4);
    CHECK(short_orbit.size() == 5);
    CHECK(full_orbit_length(40, 4) == 10);

    auto fixed = orbit({0, 5, 10}, 15, 5);
    CHECK(fixed.size() == 1);

    CHECK_THROWS_AS(orbit({0, 0, 1}, 9, 1), error);   // repeated point
    CHECK_THROWS_AS(orbit({0, 9}, 9, 1), error);      // out of range
    CHECK_THROWS_AS(orbit({}, 9, 1), error);
}

TEST_CASE("development of explicit base blocks") {
    BaseBlockSet bbs{9, 1, {{0, 3, 6}, {0, 1, 2}}};
    // {0,3,6} has a short orbit of length 3; {0,1,2} develops fully.
    Design d = develop(bbs);
    CHECK(d.n == 9);
    CHECK(d.delta == 2);
    CHECK(d.blocks.size() == 12);
    CHECK(std::ranges::is_sorted(d.blocks));

    BaseBlockSet dup{7, 1, {{0, 1, 2}, {1, 2, 3}}};
    // The orbits coincide after one translation.
    CHECK_THROWS_AS(develop(dup), error);

    CHECK_THROWS_AS(develop(BaseBlockSet{7, 1, {{0, 1, 2}, {0, 1}}}), error);
    CHECK_THROWS_AS(develop(BaseBlockSet{7, 0, {{0, 1, 2}}}), error);
    CHECK_THROWS_AS(develop(BaseBlockSet{7, 8, {{0, 1, 2}}}), error);
    CHECK_THROWS_AS(develop(BaseBlockSet{0, 1, {}}), error);
}

TEST_CASE("builtin table inventory") {
    CHECK(builtin_orders(TableFamily::delta2) ==
          std::vector<int>{5, 15, 17, 21, 23, 27, 29, 33, 39});
    const auto& d3 = builtin_orders(TableFamily::delta3);
    REQUIRE(d3.size() == 29);
    CHECK(d3.front() == 10);
    CHECK(d3[1] == 40);
    CHECK(d3.back() == 202);
    for (std::size_t i = 2; i < d3.size(); ++i) CHECK(d3[i] - d3[i - 1] == 6);
    CHECK(builtin_orders(TableFamily::delta4) == std::vector<int>{105, 117});
}

TEST_CASE("builtin tables pin published base blocks") {
    auto t5 = builtin_table(5, TableFamily::delta2);
    CHECK(t5.s == 1);
    CHECK(t5.base_blocks == std::vector<Block>{{0, 1, 4}});

    auto t17 = builtin_table(17, TableFamily::delta2);
    CHECK(t17.s == 1);
    std::vector<Block> want17{{0, 1, 16}, {0, 4, 10}, {0, 3, 8}};
    std::ranges::sort(want17);
    auto got17 = t17.base_blocks;
    std::ranges::sort(got17);
    CHECK(got17 == want17);

    auto t10 = builtin_table(10, TableFamily::delta3);
    CHECK(t10.s == 2);
    auto got10 = t10.base_blocks;
    std::ranges::sort(got10);
    CHECK(got10 == std::vector<Block>{{0, 1, 2, 8}, {0, 1, 5, 7}});

    auto t105 = builtin_table(105, TableFamily::delta4);
    CHECK(t105.s == 3);
    CHECK(t105.base_blocks.size() == 17);
    CHECK(std::ranges::count(t105.base_blocks, Block{0, 21, 42, 63, 84}) == 1);

    CHECK_THROWS_AS(builtin_table(12, TableFamily::delta3), error);
    CHECK_THROWS_AS(builtin_table(5, TableFamily::delta3), error);
}

TEST_CASE("family names round trip") {
    for (auto family : {TableFamily::delta2, TableFamily::delta3, TableFamily::delta4})
        CHECK(table_family_from_string(to_string(family)) == family);
    CHECK_THROWS_AS(table_family_from_string("delta5"), error);
    CHECK_THROWS_AS(table_family_from_string(""), error);
}

TEST_CASE("every builtin table develops into a verified design") {
    // The full sweep with graph invariants is covered by the acceptance run;
    // here a sample from each family closes the loop through recover_graph.
    for (auto [order, family] : std::vector<std::pair<int, TableFamily>>{
             {5, TableFamily::delta2},
             {21, TableFamily::delta2},
             {10, TableFamily::delta3},
             {40, TableFamily::delta3},
             {105, TableFamily::delta4}}) {
        auto d = develop(builtin_table(order, family));
        CHECK(d.n == order);
        auto p = params(order, d.delta);
        REQUIRE(p.b.has_value());
        CHECK(std::cmp_equal(d.blocks.size(), *p.b));
        Graph g = recover_graph(d);
        CHECK(regularity(g) == d.delta);
        CHECK(girth_at_least(g, 5));
        CHECK(verify(d, g).ok());
    }
}

TEST_CASE("base block text round trip") {
    auto bbs = builtin_table(40, TableFamily::delta3);
    auto back = base_blocks_from_text(to_text(bbs));
    CHECK(back.n == bbs.n);
    CHECK(back.s == bbs.s);
    CHECK(back.base_blocks == bbs.base_blocks);

    auto parsed = base_blocks_from_text("# comment\n9 1\n0 3 6 # short orbit\n0 1 2\n");
    CHECK(parsed.n == 9);
    CHECK(parsed.s == 1);
    CHECK(parsed.base_blocks.size() == 2);

    CHECK_THROWS_AS(base_blocks_from_text(""), error);
    CHECK_THROWS_AS(base_blocks_from_text("9\n"), error);
    CHECK_THROWS_AS(base_blocks_from_text("9 1 4\n"), error);
    CHECK_THROWS_AS(base_blocks_from_text("9 1\n"), error);          // no blocks
    CHECK_THROWS_AS(base_blocks_from_text("9 1\n0 1 9\n"), error);   // out of range
    CHECK_THROWS_AS(base_blocks_from_text("9 1\n0 1 x\n"), error);
}
