#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "design.hpp"
#include "graph.hpp"

namespace rgd {

// A possible remainder block: a (delta+1)-set whose internal pairs are all
// remainder pairs.
struct Candidate {
    Block block;
    std::vector<int> pair_ids;  // indices into CandidateSet::pairs
};

struct CandidateSet {
    std::vector<std::pair<int, int>> pairs;  // remainder pairs, sorted
    std::vector<Candidate> candidates;       // lexicographic by block
};

// Enumerates candidates as cliques of the remainder-pair graph; equals the
// brute-force filter over all (delta+1)-subsets.
CandidateSet candidate_blocks(const Graph& g);

// The explicit 0/1 matrix M with rows indexed by remainder pairs and columns
// by candidates; a design completion is a column subset hitting every row once.
struct CoverInstance {
    std::vector<std::pair<int, int>> pairs;
    std::vector<Block> candidates;
    std::vector<std::uint8_t> incidence;  // row-major
    bool entry(int pair_index, int candidate_index) const {
        return incidence[static_cast<std::size_t>(pair_index) * candidates.size() +
                         static_cast<std::size_t>(candidate_index)] != 0;
    }
};

CoverInstance cover_instance(const CandidateSet& cs);

enum class Status { exists, not_exists, inconclusive };
std::string to_string(Status s);

struct SearchOutcome {
    Status status = Status::inconclusive;
    std::string stage;     // "A", "B", "C", "D" or "cover"
    std::string witness;   // human-readable certificate
    long long nodes = 0;   // backtracking effort spent
    std::optional<Design> design;              // verified; present when Exists
    std::optional<unsigned long long> count;   // completions found (count mode)
};

enum class CoverMode { decide, first, count };

inline constexpr long long default_node_budget = 200'000'000;

// Coverage pre-check: NotExists when some remainder pair lies in no candidate.
// The witness is the uncovered pair with the largest index spread j-i (ties
// lexicographic). Never returns Exists.
SearchOutcome algorithm_a(const Graph& g);

// Exact cover of the remainder pairs by candidate blocks. Deterministic
// backtracking: branch on the pair with the fewest remaining candidates
// (lowest pair index on ties, with pairs down to one candidate taken as
// soon as they are seen), candidates tried in lexicographic order.
// Exceeding the node budget yields Inconclusive.
SearchOutcome exact_cover(const Graph& g, CoverMode mode,
                          long long node_budget = default_node_budget);

// Coverage pre-check, then feasibility of the explicit matrix equation;
// decides exactly like exact_cover.
SearchOutcome algorithm_b(const Graph& g, long long node_budget = default_node_budget);

// Refutation for n = (delta+1)^2: every partition of vertex 0's 2*delta
// remainder partners into two delta-sets must fail to give two valid blocks.
SearchOutcome algorithm_c(const Graph& g);

// Refutation for 3-regular graphs on 22 vertices: partitions of vertex 0's
// twelve remainder partners into four triples, with a second iteration from
// the smallest vertex outside the partner set whenever one succeeds.
SearchOutcome algorithm_d(const Graph& g);

// Random delta-regular graph with girth at least 5: repeated random pairings
// repaired by edge swaps, bounded retries. Deterministic for a fixed seed.
Graph random_regular_girth5(int n, int delta, std::uint64_t seed);

struct BatchOptions {
    std::vector<std::string> pipeline{"a", "cover"};  // stage names: a b c d cover
    long long node_budget = default_node_budget;
    int threads = 1;  // 0 = hardware concurrency
};

struct BatchRecord {
    int index = 0;
    int n = 0;
    int delta = -1;
    std::string outcome;  // Exists, NotExists, Inconclusive, Skipped or Error
    std::string stage;    // deciding stage, "-" if none
    long long nodes = 0;
    long long millis = 0;
    std::string detail;   // parse or skip reason
};

struct BatchReport {
    std::vector<BatchRecord> records;
    long long exists = 0;
    long long not_exists = 0;
    long long inconclusive = 0;
    long long errors = 0;  // malformed records and skipped graphs
};

// Reads graph6 records from `in` and runs the pipeline stages on each graph
// until one is decisive. Graphs failing the regular/girth-5 precondition are
// skipped and counted under errors; stages whose own precondition does not
// apply are passed over. Records may be processed concurrently; the report
// is ordered by input index.
BatchReport run_batch(std::istream& in, const BatchOptions& options);

// Tab-separated "index n delta outcome stage nodes millis" lines followed by
// "# summary exists=X notexists=Y inconclusive=Z errors=W".
std::string to_tsv(const BatchReport& report);

}  // namespace rgd
