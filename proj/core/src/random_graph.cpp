#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "rgd/errors.hpp"
#include "rgd/search.hpp"

namespace rgd {

namespace {

// Uniform draws below a bound via rejection, so results do not depend on the
// standard library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = engine_();
            if (x >= threshold) return x % bound;
        }
    }

  private:
    std::mt19937_64 engine_;
};

void shuffle(std::vector<int>& values, Rng& rng) {
    for (std::size_t i = values.size(); i > 1; --i)
        std::swap(values[i - 1], values[static_cast<std::size_t>(rng.below(i))]);
}

int codegree(const Graph& g, int u, int v) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

long long pair_term(const Graph& g, int u, int v) {
    int c = codegree(g, u, v);
    if (g.adjacent(u, v)) return c;
    return c > 1 ? c - 1 : 0;
}

// Zero exactly when the graph has no triangle and no four-cycle: an edge with
// a common neighbour closes a triangle, a non-adjacent pair with two common
// neighbours closes a four-cycle.
long long badness(const Graph& g) {
    long long total = 0;
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) total += pair_term(g, u, v);
    return total;
}

// Sum of the badness terms over every pair with an endpoint among the four
// swap vertices. A swap of the edges (a,b),(c,d) alters only these vertices'
// neighbourhoods, so every other pair's term is unchanged; scoring a swap
// as after-minus-before over this set avoids the full recomputation.
long long touched_terms(const Graph& g, int a, int b, int c, int d) {
    std::array<int, 4> vs{a, b, c, d};
    std::sort(vs.begin(), vs.end());
    auto last = std::unique(vs.begin(), vs.end());
    long long total = 0;
    const int n = g.order();
    for (auto it = vs.begin(); it != last; ++it) {
        int v = *it;
        for (int x = 0; x < n; ++x) {
            if (x == v) continue;
            // Pairs inside the quad count once, at their smaller vertex.
            if (x < v && std::find(vs.begin(), last, x) != last) continue;
            total += pair_term(g, x, v);
        }
    }
    return total;
}

}  // namespace

Graph random_regular_girth5(int n, int delta, std::uint64_t seed) {
    if (n < 1) fail(errc::bad_argument, "order must be positive");
    if (delta < 0) fail(errc::bad_argument, "degree must be non-negative");
    if (delta == 0) return Graph(n);
    if (static_cast<long long>(n) * delta % 2 != 0)
        fail(errc::generation_failed,
             "no " + std::to_string(delta) + "-regular graph on " + std::to_string(n) +
                 " vertices: odd degree sum");
    if (n <= delta)
        fail(errc::generation_failed, "a " + std::to_string(delta) +
                                          "-regular graph needs more than " +
                                          std::to_string(delta) + " vertices");
    if (static_cast<long long>(n) < static_cast<long long>(delta) * delta + 1)
        fail(errc::generation_failed,
             "girth five forces at least delta^2+1 = " + std::to_string(delta * delta + 1) +
                 " vertices");

    Rng rng(seed);
    constexpr int max_attempts = 500;
    constexpr int max_proposals = 30'000;
    // Abandon an attempt once this many consecutive proposals pass without a
    // strict improvement; infeasible orders then fail in bounded time instead
    // of exhausting the full proposal budget on a plateau.
    constexpr int max_stale = 2'000;

    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(delta));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < delta; ++i) stubs.push_back(v);

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        shuffle(stubs, rng);
        Graph g(n);
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i];
            int v = stubs[i + 1];
            if (u == v || g.adjacent(u, v)) {
                simple = false;
                break;
            }
            g.add_edge(u, v);
        }
        if (!simple) continue;

        // Repair short cycles by degree-preserving edge swaps, accepted when
        // they do not increase the badness score.
        auto edges = g.edges();
        const std::size_t m = edges.size();
        long long score = badness(g);
        int stale = 0;
        for (int proposal = 0; proposal < max_proposals && score > 0 && stale < max_stale;
             ++proposal, ++stale) {
            std::size_t e1 = static_cast<std::size_t>(rng.below(m));
            std::size_t e2 = static_cast<std::size_t>(rng.below(m));
            if (e1 == e2) continue;
            auto [a, b] = edges[e1];
            auto [c, d] = edges[e2];
            if (rng.below(2) == 1) std::swap(c, d);
            if (a == c || b == d || (a == d && b == c)) continue;
            if (g.adjacent(a, c) || g.adjacent(b, d)) continue;
            long long before = touched_terms(g, a, b, c, d);
            g.remove_edge(a, b);
            g.remove_edge(c, d);
            g.add_edge(a, c);
            g.add_edge(b, d);
            long long next = score + touched_terms(g, a, b, c, d) - before;
            if (next <= score) {
                if (next < score) stale = 0;
                score = next;
                edges[e1] = {std::min(a, c), std::max(a, c)};
                edges[e2] = {std::min(b, d), std::max(b, d)};
            } else {
                g.remove_edge(a, c);
                g.remove_edge(b, d);
                g.add_edge(a, b);
                g.add_edge(c, d);
            }
        }
        if (score == 0 && regularity(g) == delta && girth_at_least(g, 5)) return g;
    }
    fail(errc::generation_failed,
         "could not reach girth five for n=" + std::to_string(n) +
             ", delta=" + std::to_string(delta) + "; try another seed");
}

}  // namespace rgd
