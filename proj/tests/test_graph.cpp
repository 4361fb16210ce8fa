#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "rgd/errors.hpp"
#include "rgd/graph.hpp"
#include "rgd/graph_io.hpp"
#include "rgd/search.hpp"

using namespace rgd;

namespace {

// graph6 strings produced by an independent implementation (networkx) for the
// same labelled graphs; byte equality pins both the packing and the size
// header encodings.
const char* kCycle5 = "Dhc";
const char* kCycle9 = "HhCGGE@";
const char* kCycle11 = "JhCGGC@?K?_";
const char* kK4 = "C~";
const char* kK1 = "@";
const char* kPetersen = "IheA@GUAo";
const char* kCycle63 =
    "~??~hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@??"
    "???G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??"
    "????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G"
    "?????????_????????@?????????@??????????o?????????G";

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/rgd_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("graph edges use set semantics and reject loops") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    g.add_edge(3, 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    g.remove_edge(0, 1);
    CHECK(g.edge_count() == 1);
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK_THROWS_AS(g.add_edge(0, 0), error);
    CHECK_THROWS_AS(g.add_edge(0, 4), error);
    CHECK_THROWS_AS(g.add_edge(-1, 2), error);
}

TEST_CASE("cycle graphs") {
    for (int n = 3; n <= 12; ++n) {
        Graph g = cycle(n);
        CHECK(g.order() == n);
        CHECK(g.edge_count() == static_cast<std::size_t>(n));
        CHECK(regularity(g) == 2);
        CHECK(girth(g) == n);
        CHECK(is_connected(g));
    }
    CHECK_THROWS_AS(cycle(2), error);
}

TEST_CASE("complete graphs") {
    Graph g = complete(6);
    CHECK(g.order() == 6);
    CHECK(g.edge_count() == 15);
    CHECK(regularity(g) == 5);
    CHECK(girth(g) == 3);
    CHECK(complete(1).edge_count() == 0);
    CHECK(complete(2).edge_count() == 1);
    CHECK_FALSE(girth(complete(2)).has_value());
}

TEST_CASE("generalized petersen graphs") {
    Graph g = generalized_petersen(20, 4);
    CHECK(g.order() == 40);
    CHECK(g.edge_count() == 60);
    CHECK(regularity(g) == 3);
    // Outer cycle, spokes, inner i ~ i+k.
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(19, 0));
    CHECK(g.adjacent(0, 20));
    CHECK(g.adjacent(20, 24));
    CHECK(g.adjacent(39, 23));
    CHECK(petersen() == generalized_petersen(5, 2));
    CHECK(girth(petersen()) == 5);
    CHECK_THROWS_AS(generalized_petersen(4, 2), error);
    CHECK_THROWS_AS(generalized_petersen(5, 0), error);
}

TEST_CASE("sylvester graph invariants") {
    Graph g = sylvester();
    CHECK(g.order() == 36);
    CHECK(g.edge_count() == 90);
    CHECK(regularity(g) == 5);
    CHECK(girth(g) == 5);
    CHECK(is_connected(g));
}

TEST_CASE("hoffman-singleton graph invariants") {
    Graph g = hoffman_singleton();
    CHECK(g.order() == 50);
    CHECK(g.edge_count() == 175);
    CHECK(regularity(g) == 7);
    CHECK(girth(g) == 5);
    CHECK(is_connected(g));
}

TEST_CASE("disjoint union relabels the second component") {
    Graph g = disjoint_union(cycle(5), cycle(6));
    CHECK(g.order() == 11);
    CHECK(g.edge_count() == 11);
    CHECK(regularity(g) == 2);
    CHECK(girth(g) == 5);
    CHECK_FALSE(is_connected(g));
    CHECK(g.adjacent(5, 6));
    CHECK(g.adjacent(5, 10));
    CHECK_FALSE(g.adjacent(4, 5));
}

TEST_CASE("regularity and girth edge cases") {
    CHECK(regularity(Graph(0)) == 0);
    CHECK(regularity(Graph(3)) == 0);
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK_FALSE(regularity(star).has_value());
    CHECK_FALSE(girth(star).has_value());
    CHECK(girth_at_least(star, 100));

    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK_FALSE(girth(path).has_value());

    CHECK(girth(cycle(5)) == 5);
    CHECK(girth_at_least(cycle(5), 5));
    CHECK_FALSE(girth_at_least(cycle(5), 6));

    Graph two_triangles = disjoint_union(complete(3), cycle(5));
    CHECK(girth(two_triangles) == 3);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(Graph(0)));
    CHECK(is_connected(Graph(1)));
    CHECK_FALSE(is_connected(Graph(2)));
    CHECK(is_connected(cycle(7)));
    CHECK_FALSE(is_connected(disjoint_union(cycle(5), cycle(5))));
}

TEST_CASE("make_graph dispatch") {
    CHECK(make_graph("cycle", {9}) == cycle(9));
    CHECK(make_graph("complete", {4}) == complete(4));
    CHECK(make_graph("gp", {20, 4}) == generalized_petersen(20, 4));
    CHECK(make_graph("petersen", {}) == petersen());
    CHECK(make_graph("sylvester", {}) == sylvester());
    CHECK(make_graph("hs", {}) == hoffman_singleton());
    CHECK(make_graph("hoffman_singleton", {}) == hoffman_singleton());
    CHECK_THROWS_AS(make_graph("cycle", {}), error);
    CHECK_THROWS_AS(make_graph("cycle", {3, 4}), error);
    CHECK_THROWS_AS(make_graph("mystery", {1}), error);
}

TEST_CASE("graph6 golden strings match an independent encoder") {
    CHECK(to_graph6(cycle(5)) == kCycle5);
    CHECK(to_graph6(cycle(9)) == kCycle9);
    CHECK(to_graph6(cycle(11)) == kCycle11);
    CHECK(to_graph6(complete(4)) == kK4);
    CHECK(to_graph6(Graph(1)) == kK1);
    CHECK(to_graph6(petersen()) == kPetersen);
    CHECK(to_graph6(cycle(63)) == kCycle63);  // exercises the '~' size header
    CHECK(parse_graph6(kCycle63) == cycle(63));
}

TEST_CASE("graph6 round trips") {
    std::vector<Graph> graphs{Graph(0),       Graph(1),          Graph(5),   cycle(5),
                              cycle(62),      cycle(63),         cycle(100), complete(7),
                              petersen(),     sylvester(),       hoffman_singleton(),
                              generalized_petersen(20, 4),       disjoint_union(cycle(5), cycle(6))};
    for (const auto& g : graphs) CHECK(parse_graph6(to_graph6(g)) == g);
    CHECK(parse_graph6(">>graph6<<Dhc") == cycle(5));
}

TEST_CASE("graph6 rejects malformed records") {
    CHECK_THROWS_AS(parse_graph6(""), error);
    CHECK_THROWS_AS(parse_graph6("Dhc?"), error);   // too long
    CHECK_THROWS_AS(parse_graph6("Dh"), error);     // too short
    CHECK_THROWS_AS(parse_graph6("D c"), error);    // byte below '?'
    CHECK_THROWS_AS(parse_graph6("Dhd"), error);    // nonzero padding bits
    CHECK_THROWS_AS(parse_graph6("~?"), error);     // truncated size header
}

TEST_CASE("graph6 files hold one record per line") {
    auto graphs = parse_graph6_file(">>graph6<<Dhc\n\nIheA@GUAo\nC~\n");
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0] == cycle(5));
    CHECK(graphs[1] == petersen());
    CHECK(graphs[2] == complete(4));
}

TEST_CASE("edge list round trip and errors") {
    Graph g = disjoint_union(cycle(5), cycle(6));
    CHECK(parse_edge_list(to_edge_list(g)) == g);
    CHECK(parse_edge_list("3\n0 1 # a comment\n# full comment line\n1 2\n") .edge_count() == 2);
    CHECK_THROWS_AS(parse_edge_list(""), error);
    CHECK_THROWS_AS(parse_edge_list("2\n0 2\n"), error);    // vertex out of range
    CHECK_THROWS_AS(parse_edge_list("2\n0\n"), error);      // missing endpoint
    CHECK_THROWS_AS(parse_edge_list("2\n0 1 9\n"), error);  // trailing field
    CHECK_THROWS_AS(parse_edge_list("x\n"), error);
}

TEST_CASE("graph specs") {
    CHECK(graph_from_spec("cycle:9") == cycle(9));
    CHECK(graph_from_spec("complete:4") == complete(4));
    CHECK(graph_from_spec("gp:20,4") == generalized_petersen(20, 4));
    CHECK(graph_from_spec("petersen") == petersen());
    CHECK(graph_from_spec("union:cycle:5+cycle:6") == disjoint_union(cycle(5), cycle(6)));
    CHECK(graph_from_spec("union:cycle:5+cycle:5+cycle:7") ==
          disjoint_union(disjoint_union(cycle(5), cycle(5)), cycle(7)));
    CHECK(graph_from_spec("random:22,3,7") == random_regular_girth5(22, 3, 7));
    CHECK_THROWS_AS(graph_from_spec("cycle"), error);
    CHECK_THROWS_AS(graph_from_spec("cycle:x"), error);
    CHECK_THROWS_AS(graph_from_spec("nonsuch:1"), error);

    auto g6_path = write_temp("spec.g6", to_graph6(petersen()) + "\n");
    CHECK(graph_from_spec(g6_path) == petersen());
    auto el_path = write_temp("spec.edges", to_edge_list(cycle(8)));
    CHECK(graph_from_spec(el_path) == cycle(8));
    std::remove(g6_path.c_str());
    std::remove(el_path.c_str());
}

TEST_CASE("random generation is deterministic per seed") {
    CHECK(random_regular_girth5(22, 3, 1) == random_regular_girth5(22, 3, 1));
    CHECK(random_regular_girth5(25, 4, 9) == random_regular_girth5(25, 4, 9));
    CHECK_FALSE(random_regular_girth5(22, 3, 1) == random_regular_girth5(22, 3, 2));
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        Graph g = random_regular_girth5(22, 3, seed);
        CHECK(g.order() == 22);
        CHECK(regularity(g) == 3);
        CHECK(girth_at_least(g, 5));
    }
}

TEST_CASE("random generation failure modes") {
    CHECK_THROWS_AS(random_regular_girth5(0, 3, 1), error);
    CHECK_THROWS_AS(random_regular_girth5(10, -1, 1), error);
    // Odd degree sum.
    CHECK_THROWS_WITH_AS(random_regular_girth5(5, 3, 1),
                         "no 3-regular graph on 5 vertices: odd degree sum", error);
    // Below the girth-five minimum.
    CHECK_THROWS_AS(random_regular_girth5(8, 3, 1), error);
    CHECK_THROWS_AS(random_regular_girth5(4, 4, 1), error);
    // delta = 0 yields the empty graph.
    CHECK(random_regular_girth5(6, 0, 1) == Graph(6));
}
