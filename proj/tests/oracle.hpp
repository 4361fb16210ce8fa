#pragma once

// Brute-force reference implementations for the test suite. These are written
// from the definitions alone and share no code paths with the library: pair
// distances come from BFS, candidate blocks from filtering every k-subset,
// and completion counts from covering the lexicographically first uncovered
// pair at each step with no ordering heuristics.

#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "rgd/graph.hpp"

namespace oracle {

inline std::vector<int> bfs_distances(const rgd::Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

// Pairs at distance three or more (including disconnected pairs), sorted.
inline std::vector<std::pair<int, int>> remainder_pairs(const rgd::Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < g.order(); ++i) {
        auto dist = bfs_distances(g, i);
        for (int j = i + 1; j < g.order(); ++j)
            if (dist[static_cast<std::size_t>(j)] < 0 || dist[static_cast<std::size_t>(j)] >= 3)
                out.emplace_back(i, j);
    }
    return out;
}

// Every k-subset of the vertices whose pairs are all remainder pairs, in
// lexicographic order, found by plain enumeration of all subsets.
inline std::vector<std::vector<int>> candidate_blocks(const rgd::Graph& g, int k) {
    const int n = g.order();
    std::vector<std::vector<char>> remainder(static_cast<std::size_t>(n),
                                             std::vector<char>(static_cast<std::size_t>(n), 0));
    for (auto [i, j] : remainder_pairs(g)) {
        remainder[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        remainder[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
    }
    std::vector<std::vector<int>> out;
    std::vector<int> subset;
    auto extend = [&](auto&& self, int from) -> void {
        if (static_cast<int>(subset.size()) == k) {
            for (std::size_t a = 0; a < subset.size(); ++a)
                for (std::size_t b = a + 1; b < subset.size(); ++b)
                    if (!remainder[static_cast<std::size_t>(subset[a])]
                                  [static_cast<std::size_t>(subset[b])])
                        return;
            out.push_back(subset);
            return;
        }
        for (int v = from; v < n; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

namespace detail {

struct CoverProblem {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> blocks;         // candidate blocks
    std::vector<std::vector<int>> pairs_of_block; // indices into `pairs`
    std::vector<std::vector<int>> blocks_of_pair; // indices into `blocks`
};

inline CoverProblem build(const rgd::Graph& g, int k) {
    CoverProblem p;
    p.n = g.order();
    p.pairs = remainder_pairs(g);
    p.blocks = candidate_blocks(g, k);
    std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(p.n),
                                             std::vector<int>(static_cast<std::size_t>(p.n), -1));
    for (std::size_t t = 0; t < p.pairs.size(); ++t) {
        auto [i, j] = p.pairs[t];
        pair_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(t);
        pair_index[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = static_cast<int>(t);
    }
    p.blocks_of_pair.resize(p.pairs.size());
    p.pairs_of_block.resize(p.blocks.size());
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        const auto& blk = p.blocks[b];
        for (std::size_t x = 0; x < blk.size(); ++x)
            for (std::size_t y = x + 1; y < blk.size(); ++y) {
                int t = pair_index[static_cast<std::size_t>(blk[x])]
                                  [static_cast<std::size_t>(blk[y])];
                p.pairs_of_block[b].push_back(t);
                p.blocks_of_pair[static_cast<std::size_t>(t)].push_back(static_cast<int>(b));
            }
    }
    return p;
}

// Counts exact covers; with `stop_at_first`, returns 1 as soon as one exists.
inline std::uint64_t count_covers(const CoverProblem& p, std::vector<char>& covered,
                                  std::size_t scan_from, bool stop_at_first) {
    std::size_t next = scan_from;
    while (next < covered.size() && covered[next]) ++next;
    if (next == covered.size()) return 1;
    std::uint64_t total = 0;
    for (int b : p.blocks_of_pair[next]) {
        bool free = true;
        for (int t : p.pairs_of_block[static_cast<std::size_t>(b)])
            if (covered[static_cast<std::size_t>(t)]) {
                free = false;
                break;
            }
        if (!free) continue;
        for (int t : p.pairs_of_block[static_cast<std::size_t>(b)])
            covered[static_cast<std::size_t>(t)] = 1;
        total += count_covers(p, covered, next + 1, stop_at_first);
        for (int t : p.pairs_of_block[static_cast<std::size_t>(b)])
            covered[static_cast<std::size_t>(t)] = 0;
        if (stop_at_first && total > 0) return total;
    }
    return total;
}

}  // namespace detail

// Number of ways to cover every remainder pair exactly once with candidate
// blocks of size k. By construction this is also the number of completions of
// the neighbourhood blocks into a full design.
inline std::uint64_t completion_count(const rgd::Graph& g, int k) {
    auto p = detail::build(g, k);
    std::vector<char> covered(p.pairs.size(), 0);
    return detail::count_covers(p, covered, 0, false);
}

inline bool completion_exists(const rgd::Graph& g, int k) {
    auto p = detail::build(g, k);
    std::vector<char> covered(p.pairs.size(), 0);
    return detail::count_covers(p, covered, 0, true) > 0;
}

}  // namespace oracle
