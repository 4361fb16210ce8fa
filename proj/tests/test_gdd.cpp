#include <map>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "rgd/design.hpp"
#include "rgd/difference.hpp"
#include "rgd/errors.hpp"
#include "rgd/gdd.hpp"
#include "rgd/graph.hpp"

using namespace rgd;

namespace {

template <class F>
errc code_of(F&& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected an rgd::error");
    return errc::bad_argument;
}

// Transversal design TD(4,3) from two orthogonal Latin squares of order 3;
// exercises the verifier away from block size three.
Gdd td43() {
    Gdd d;
    d.k = 4;
    d.groups = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            d.blocks.push_back({i, 3 + j, 6 + (i + j) % 3, 9 + (i + 2 * j) % 3});
    return d;
}

}  // namespace

TEST_CASE("triple GDDs of type g^3") {
    for (int g : {1, 2, 5, 8}) {
        Gdd d = gdd_g3(g);
        CHECK(d.k == 3);
        CHECK(d.point_count() == 3 * g);
        CHECK(d.groups.size() == 3);
        CHECK(d.blocks.size() == static_cast<std::size_t>(g) * static_cast<std::size_t>(g));
        CHECK(d.type_signature() == std::vector<std::pair<int, int>>{{g, 3}});
        CHECK(verify_gdd(d).ok());
    }
    CHECK_THROWS_AS(gdd_g3(0), error);
}

TEST_CASE("transversal design verifies") {
    Gdd d = td43();
    CHECK(d.point_count() == 12);
    CHECK(d.type_signature() == std::vector<std::pair<int, int>>{{3, 4}});
    CHECK(verify_gdd(d).ok());
}

TEST_CASE("GDD violations") {
    SUBCASE("groups must partition the points") {
        Gdd d{3, {{0, 1}, {1, 2}}, {}};
        auto report = verify_gdd(d);
        bool partition = false;
        for (const auto& v : report.violations)
            partition |= v.kind == Violation::Kind::group_partition;
        CHECK(partition);
    }
    SUBCASE("blocks may not meet a group twice") {
        Gdd d = gdd_g3(2);
        d.blocks.push_back({0, 1, 3});  // 0 and 1 share a group
        auto report = verify_gdd(d);
        bool within = false;
        for (const auto& v : report.violations)
            within |= v.kind == Violation::Kind::within_group_pair;
        CHECK(within);
    }
    SUBCASE("block size") {
        Gdd d = gdd_g3(2);
        d.blocks.front().pop_back();
        auto report = verify_gdd(d);
        bool size = false;
        for (const auto& v : report.violations) size |= v.kind == Violation::Kind::block_size;
        CHECK(size);
    }
    SUBCASE("dropped and duplicated blocks show as coverage errors") {
        Gdd d = gdd_g3(3);
        Block removed = d.blocks.back();
        d.blocks.pop_back();
        auto report = verify_gdd(d);
        int under = 0;
        for (const auto& v : report.violations)
            under += v.kind == Violation::Kind::pair_undercovered;
        CHECK(under == 3);

        d.blocks.push_back(removed);
        d.blocks.push_back(removed);
        report = verify_gdd(d);
        int over = 0;
        for (const auto& v : report.violations)
            over += v.kind == Violation::Kind::pair_overcovered;
        CHECK(over == 3);
    }
    SUBCASE("out-of-range points throw") {
        Gdd d = gdd_g3(2);
        d.blocks.front().front() = 6;
        CHECK_THROWS_AS(verify_gdd(d), error);
    }
}

TEST_CASE("GDD JSON round trip") {
    Gdd d = gdd_g3(4);
    Gdd back = gdd_from_json(to_json(d));
    CHECK(back.k == d.k);
    CHECK(back.groups == d.groups);
    CHECK(back.blocks == d.blocks);

    // Parsing checks shape only; a well-formed but incorrect GDD still parses
    // and is left for verify_gdd to reject.
    Gdd sparse = gdd_from_json(R"({"k": 3, "groups": [[0], [1], [2]], "blocks": []})");
    CHECK_FALSE(verify_gdd(sparse).ok());

    CHECK_THROWS_AS(gdd_from_json("not json"), error);
    CHECK_THROWS_AS(gdd_from_json(R"({"groups": [], "blocks": []})"), error);
    CHECK_THROWS_AS(gdd_from_json(R"({"k": 0, "groups": [[0]], "blocks": []})"), error);
    CHECK_THROWS_AS(gdd_from_json(R"({"k": 3, "groups": [[0, 1]], "blocks": [[0, 5]]})"), error);
    CHECK_THROWS_AS(gdd_from_json(R"({"k": 3, "groups": 7, "blocks": []})"), error);
}

TEST_CASE("wilson composition over a triple GDD") {
    Gdd d = gdd_g3(5);
    std::map<int, std::pair<Design, Graph>> ingredients{{5, cycle_design(5)}};
    auto [design, graph] = wilson_fill(d, ingredients);
    CHECK(design.n == 15);
    CHECK(design.delta == 2);
    CHECK(design.blocks.size() == 25 + 3 * 5);
    CHECK(regularity(graph) == 2);
    CHECK(girth_at_least(graph, 5));
    CHECK_FALSE(is_connected(graph));
    CHECK(verify(design, graph).ok());
    CHECK(recover_graph(design) == graph);
}

TEST_CASE("wilson composition failure codes") {
    Gdd d = gdd_g3(5);

    CHECK(code_of([&] { wilson_fill(d, {}); }) == errc::missing_ingredient);

    std::map<int, std::pair<Design, Graph>> wrong_order{{5, cycle_design(17)}};
    CHECK(code_of([&] { wilson_fill(d, wrong_order); }) == errc::bad_argument);

    std::map<int, std::pair<Design, Graph>> wrong_k{{5, {Design{5, 3, {}}, Graph(5)}}};
    CHECK(code_of([&] { wilson_fill(d, wrong_k); }) == errc::bad_argument);

    Gdd bad = d;
    bad.blocks.pop_back();
    std::map<int, std::pair<Design, Graph>> fills{{5, cycle_design(5)}};
    CHECK(code_of([&] { wilson_fill(bad, fills); }) == errc::precondition_violated);

    auto dented = cycle_design(5);
    dented.first.blocks.pop_back();
    std::map<int, std::pair<Design, Graph>> invalid{{5, dented}};
    CHECK(code_of([&] { wilson_fill(d, invalid); }) == errc::verification_failed);
}
