#include "rgd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "rgd/errors.hpp"

namespace rgd {

namespace {
#include "sylvester_edges.inc"

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        fail(errc::bad_argument, "vertex " + std::to_string(v) + " out of range");
}
}  // namespace

Graph::Graph(int n) {
    if (n < 0) fail(errc::bad_argument, "negative graph order");
    adj_.resize(static_cast<std::size_t>(n));
}

void Graph::add_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) fail(errc::bad_argument, "loop at vertex " + std::to_string(u));
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it == nu.end() || *it != v) fail(errc::bad_argument, "no such edge");
    nu.erase(it);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edge_count_;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(*this, u);
    check_vertex(*this, v);
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(*this, v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph cycle(int n) {
    if (n < 3) fail(errc::bad_argument, "cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n)
        fail(errc::bad_argument, "generalized Petersen graph needs n >= 3, 1 <= k < n/2");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);          // outer cycle
        g.add_edge(i, n + i);                // spokes
        g.add_edge(n + i, n + (i + k) % n);  // inner star polygon
    }
    return g;
}

Graph petersen() { return generalized_petersen(5, 2); }

Graph sylvester() {
    Graph g(36);
    for (const auto& e : kSylvesterEdges) g.add_edge(e[0], e[1]);
    return g;
}

Graph hoffman_singleton() {
    Graph g(50);
    auto p = [](int h, int i) { return 5 * h + i; };
    auto q = [](int k, int j) { return 25 + 5 * k + j; };
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i) {
            g.add_edge(p(h, i), p(h, (i + 1) % 5));
            g.add_edge(q(h, i), q(h, (i + 2) % 5));
        }
    for (int h = 0; h < 5; ++h)
        for (int k = 0; k < 5; ++k)
            for (int i = 0; i < 5; ++i) g.add_edge(p(h, i), q(k, (h * k + i) % 5));
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

Graph make_graph(const std::string& kind, const std::vector<int>& args) {
    auto want = [&](std::size_t count) {
        if (args.size() != count)
            fail(errc::bad_argument, "graph kind '" + kind + "' takes " + std::to_string(count) +
                                         " argument(s), got " + std::to_string(args.size()));
    };
    if (kind == "cycle") {
        want(1);
        return cycle(args[0]);
    }
    if (kind == "complete") {
        want(1);
        return complete(args[0]);
    }
    if (kind == "gp" || kind == "generalized_petersen") {
        want(2);
        return generalized_petersen(args[0], args[1]);
    }
    if (kind == "petersen") {
        want(0);
        return petersen();
    }
    if (kind == "sylvester") {
        want(0);
        return sylvester();
    }
    if (kind == "hs" || kind == "hoffman_singleton") {
        want(0);
        return hoffman_singleton();
    }
    fail(errc::bad_argument, "unknown graph kind '" + kind + "'");
}

std::optional<int> regularity(const Graph& g) {
    if (g.order() == 0) return 0;
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> queue(static_cast<std::size_t>(n));
    // BFS from every vertex; a non-tree edge (u, w) closes a walk of length
    // dist[u] + dist[w] + 1 through the root, never shorter than the girth,
    // and exact for roots on a shortest cycle.
    for (int r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        int head = 0;
        int tail = 0;
        dist[static_cast<std::size_t>(r)] = 0;
        queue[tail++] = r;
        while (head < tail) {
            int u = queue[head++];
            if (best >= 0 && 2 * dist[static_cast<std::size_t>(u)] >= best) break;
            for (int w : g.neighbors(u)) {
                auto& dw = dist[static_cast<std::size_t>(w)];
                if (dw < 0) {
                    dw = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue[tail++] = w;
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    int len = dist[static_cast<std::size_t>(u)] + dw + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool girth_at_least(const Graph& g, int bound) {
    auto got = girth(g);
    return !got || *got >= bound;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++visited;
                stack.push_back(w);
            }
    }
    return visited == n;
}

}  // namespace rgd
