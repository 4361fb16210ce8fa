#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace rgd {

using Block = std::vector<int>;

// Pairwise design over the vertices of a delta-regular graph of girth >= 5:
// blocks of size delta+1, adjacent pairs in exactly two blocks, other pairs
// in exactly one. Holds whatever it is given; verify() reports violations.
struct Design {
    int n = 0;
    int delta = 0;
    std::vector<Block> blocks;
};

// Sorts every block and orders the block list lexicographically.
void canonicalize(Design& d);

struct DesignParams {
    int k = 0;                                 // block size, delta + 1
    std::optional<long long> b;                // block count, when divisibility holds
    std::optional<long long> r;                // replication, when (n-1)/delta is integral
    std::optional<long long> remainder_count;  // b minus the n neighbourhood blocks
    bool admissible = false;
};

// Arithmetic admissibility of order n for degree delta:
// n >= delta^2 + 1, n = 1 (mod delta), n(n + delta - 1) = 0 (mod delta(delta+1)).
// delta = 0 admits only n = 1.
DesignParams params(long long n, int delta);

// Closed neighbourhoods N[i] for every vertex i, as sorted blocks.
// Requires a regular graph with girth at least 5.
std::vector<Block> neighborhood_blocks(const Graph& g);

// Pairs covered by no neighbourhood block, i.e. pairs at distance >= 3. Sorted.
std::vector<std::pair<int, int>> remainder_pairs(const Graph& g);

struct Violation {
    enum class Kind {
        block_size,
        pair_undercovered,
        pair_overcovered,
        replication,
        duplicate_block,
        group_partition,    // GDD: point not in exactly one group
        within_group_pair,  // GDD: block meets a group twice
    };
    Kind kind;
    Block block;                    // offending block, when applicable
    std::pair<int, int> pair{-1, -1};
    int point = -1;
    long long observed = 0;
    long long expected = 0;
    std::string to_string() const;
};

struct VerificationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Checks block sizes, pair coverage (edges twice, non-edges once), replication
// and duplicate blocks (duplicates only count against block size >= 3).
// Throws on order mismatch or when g is not d.delta-regular.
VerificationReport verify(const Design& d, const Graph& g);

// Classification of all vertex pairs relative to the neighbourhood blocks.
struct PairTable {
    enum class Class : unsigned char {
        edge,          // covered twice by neighbourhood blocks
        neighborhood,  // distance-2 pair, covered once
        remainder,     // left for the remainder blocks
    };
    int n = 0;
    std::vector<Class> classes;  // upper triangle, column-major
    Class at(int i, int j) const;
};

PairTable pair_table(const Graph& g);
// Triangular occurrence grid: 'X' for pairs inside a neighbourhood block
// (edges and distance-2 pairs), '-' for remainder pairs. Single-character
// vertex labels continue 'A'.. past 9, so n is limited to 62.
std::string render(const PairTable& t);

// Rebuilds the graph whose edges are the doubly covered pairs, then validates:
// multiplicities in {1,2}, recovered graph d.delta-regular with girth >= 5,
// and verify(d, recovered) clean.
Graph recover_graph(const Design& d);

// Degenerate degrees: delta = 0 gives the empty design on one vertex; delta = 1
// takes the perfect matching {2i, 2i+1} plus every pair as a block once.
std::pair<Design, Graph> trivial_design(int n, int delta);

// Text format: "n delta" header line, one sorted block per line, '#' comments.
std::string to_text(const Design& d);
Design design_from_text(std::string_view text);
// JSON object {"n": .., "delta": .., "blocks": [[..], ..]}.
std::string to_json(const Design& d);
Design design_from_json(std::string_view text);

}  // namespace rgd
