#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rgd {

// Simple undirected graph on vertices 0..n-1: no loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    // Set semantics: adding an existing edge is a no-op.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    const std::vector<int>& neighbors(int v) const;
    // All edges as pairs u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<int>> adj_;  // sorted neighbour lists
    std::size_t edge_count_ = 0;
};

Graph cycle(int n);
Graph complete(int n);
// Outer cycle 0..n-1, inner vertices n..2n-1 joined as i ~ i+k (mod n).
Graph generalized_petersen(int n, int k);
Graph petersen();
// 36 vertices, 5-regular, girth 5.
Graph sylvester();
// 50 vertices, 7-regular, girth 5; five pentagons and five pentagrams,
// with vertex i of pentagon h joined to vertex h*k+i (mod 5) of pentagram k.
Graph hoffman_singleton();
// Relabels b's vertices by an offset of a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// Dispatch by name: "cycle" n, "complete" n, "gp" n k, "petersen",
// "sylvester", "hs" / "hoffman_singleton".
Graph make_graph(const std::string& kind, const std::vector<int>& args);

// Common degree, or nullopt if degrees differ. A graph with no vertices is 0-regular.
std::optional<int> regularity(const Graph& g);
// Length of a shortest cycle; nullopt when the graph is acyclic.
std::optional<int> girth(const Graph& g);
// True when girth(g) is at least `bound`, counting an acyclic graph as infinite girth.
bool girth_at_least(const Graph& g, int bound);
bool is_connected(const Graph& g);

}  // namespace rgd
