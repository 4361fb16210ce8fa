#include "rgd/search.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "rgd/errors.hpp"

namespace rgd {

namespace {

std::size_t pair_slot(int i, int j) {
    // column-major index of {i, j} with i < j among all unordered pairs
    return static_cast<std::size_t>(j) * (static_cast<std::size_t>(j) - 1) / 2 +
           static_cast<std::size_t>(i);
}

std::string pair_text(int i, int j) {
    return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

// Symmetric adjacency matrix of the remainder-pair graph.
std::vector<char> remainder_matrix(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<char> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (auto [i, j] : pairs) {
        m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = 1;
        m[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = 1;
    }
    return m;
}

struct CliqueFinder {
    int n;
    int k;
    const std::vector<char>& matrix;
    const std::vector<int>& slot_to_pair;  // column-major slot -> index in pairs
    std::vector<Candidate>& out;
    Block current;

    bool joined(int u, int v) const {
        return matrix[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(v)] != 0;
    }

    void emit() {
        Candidate c;
        c.block = current;
        for (std::size_t a = 0; a < current.size(); ++a)
            for (std::size_t b = a + 1; b < current.size(); ++b)
                c.pair_ids.push_back(slot_to_pair[pair_slot(current[a], current[b])]);
        out.push_back(std::move(c));
    }

    void extend(const std::vector<int>& allowed) {
        if (std::cmp_equal(current.size(), k)) {
            emit();
            return;
        }
        if (current.size() + allowed.size() < static_cast<std::size_t>(k)) return;
        for (std::size_t idx = 0; idx < allowed.size(); ++idx) {
            int v = allowed[idx];
            std::vector<int> next;
            next.reserve(allowed.size() - idx);
            for (std::size_t rest = idx + 1; rest < allowed.size(); ++rest)
                if (joined(v, allowed[rest])) next.push_back(allowed[rest]);
            current.push_back(v);
            extend(next);
            current.pop_back();
        }
    }
};

// Deterministic exact-cover solver over the remainder pairs (columns) and
// candidate blocks (rows), using dancing links. Column headers occupy node
// ids equal to their column ids; the nodes of a row are contiguous, so row
// traversal needs no left/right pointers.
class CoverSolver {
  public:
    CoverSolver(int num_cols, const std::vector<std::vector<int>>& rows) : root_(num_cols) {
        left_.resize(static_cast<std::size_t>(num_cols) + 1);
        right_.resize(static_cast<std::size_t>(num_cols) + 1);
        for (int c = 0; c <= num_cols; ++c) {
            left_[static_cast<std::size_t>(c)] = c == 0 ? num_cols : c - 1;
            right_[static_cast<std::size_t>(c)] = c == num_cols ? 0 : c + 1;
        }
        col_size_.assign(static_cast<std::size_t>(num_cols), 0);
        std::size_t entries = 0;
        for (const auto& row : rows) entries += row.size();
        up_.reserve(static_cast<std::size_t>(num_cols) + entries);
        down_.reserve(up_.capacity());
        col_of_.reserve(up_.capacity());
        row_of_.reserve(up_.capacity());
        for (int c = 0; c < num_cols; ++c) {
            up_.push_back(c);
            down_.push_back(c);
            col_of_.push_back(c);
            row_of_.push_back(-1);
        }
        row_begin_.reserve(rows.size() + 1);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            row_begin_.push_back(static_cast<int>(up_.size()));
            for (int c : rows[r]) {
                int id = static_cast<int>(up_.size());
                up_.push_back(up_[static_cast<std::size_t>(c)]);
                down_.push_back(c);
                col_of_.push_back(c);
                row_of_.push_back(static_cast<int>(r));
                down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(c)])] = id;
                up_[static_cast<std::size_t>(c)] = id;
                ++col_size_[static_cast<std::size_t>(c)];
            }
        }
        row_begin_.push_back(static_cast<int>(up_.size()));
    }

    void run(CoverMode mode, long long budget) {
        mode_ = mode;
        budget_ = budget;
        search();
    }

    long long nodes() const { return nodes_; }
    bool aborted() const { return aborted_; }
    unsigned long long solutions() const { return solutions_; }
    bool has_solution() const { return have_first_; }
    const std::vector<int>& first_solution() const { return first_; }

  private:
    void cover(int c) {
        right_[static_cast<std::size_t>(left_[static_cast<std::size_t>(c)])] =
            right_[static_cast<std::size_t>(c)];
        left_[static_cast<std::size_t>(right_[static_cast<std::size_t>(c)])] =
            left_[static_cast<std::size_t>(c)];
        for (int i = down_[static_cast<std::size_t>(c)]; i != c; i = down_[static_cast<std::size_t>(i)]) {
            int r = row_of_[static_cast<std::size_t>(i)];
            for (int j = row_begin_[static_cast<std::size_t>(r)];
                 j != row_begin_[static_cast<std::size_t>(r) + 1]; ++j) {
                if (j == i) continue;
                up_[static_cast<std::size_t>(down_[static_cast<std::size_t>(j)])] =
                    up_[static_cast<std::size_t>(j)];
                down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(j)])] =
                    down_[static_cast<std::size_t>(j)];
                --col_size_[static_cast<std::size_t>(col_of_[static_cast<std::size_t>(j)])];
            }
        }
    }

    void uncover(int c) {
        for (int i = up_[static_cast<std::size_t>(c)]; i != c; i = up_[static_cast<std::size_t>(i)]) {
            int r = row_of_[static_cast<std::size_t>(i)];
            for (int j = row_begin_[static_cast<std::size_t>(r) + 1] - 1;
                 j >= row_begin_[static_cast<std::size_t>(r)]; --j) {
                if (j == i) continue;
                ++col_size_[static_cast<std::size_t>(col_of_[static_cast<std::size_t>(j)])];
                up_[static_cast<std::size_t>(down_[static_cast<std::size_t>(j)])] = j;
                down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(j)])] = j;
            }
        }
        left_[static_cast<std::size_t>(right_[static_cast<std::size_t>(c)])] = c;
        right_[static_cast<std::size_t>(left_[static_cast<std::size_t>(c)])] = c;
    }

    void search() {
        if (aborted_ || done_) return;
        if (nodes_ >= budget_) {
            aborted_ = true;
            return;
        }
        ++nodes_;
        if (right_[static_cast<std::size_t>(root_)] == root_) {
            ++solutions_;
            if (!have_first_) {
                have_first_ = true;
                first_ = partial_;
            }
            if (mode_ != CoverMode::count) done_ = true;
            return;
        }
        // Branch on the pair with the fewest remaining candidates; header order
        // is ascending by pair index, so a strict comparison picks the lowest
        // pair index among ties. A pair with at most one candidate ends the
        // scan at once: the move is forced or the branch is dead either way.
        int best = -1;
        for (int c = right_[static_cast<std::size_t>(root_)]; c != root_;
             c = right_[static_cast<std::size_t>(c)])
            if (best < 0 || col_size_[static_cast<std::size_t>(c)] < col_size_[static_cast<std::size_t>(best)]) {
                best = c;
                if (col_size_[static_cast<std::size_t>(best)] <= 1) break;
            }
        if (col_size_[static_cast<std::size_t>(best)] == 0) return;
        cover(best);
        for (int i = down_[static_cast<std::size_t>(best)]; i != best;
             i = down_[static_cast<std::size_t>(i)]) {
            int r = row_of_[static_cast<std::size_t>(i)];
            partial_.push_back(r);
            for (int j = row_begin_[static_cast<std::size_t>(r)];
                 j != row_begin_[static_cast<std::size_t>(r) + 1]; ++j)
                if (j != i) cover(col_of_[static_cast<std::size_t>(j)]);
            search();
            for (int j = row_begin_[static_cast<std::size_t>(r) + 1] - 1;
                 j >= row_begin_[static_cast<std::size_t>(r)]; --j)
                if (j != i) uncover(col_of_[static_cast<std::size_t>(j)]);
            partial_.pop_back();
            if (aborted_ || done_) break;
        }
        uncover(best);
    }

    std::vector<int> left_, right_;
    std::vector<int> up_, down_, col_of_, row_of_;
    std::vector<int> col_size_;
    std::vector<int> row_begin_;
    int root_;

    CoverMode mode_ = CoverMode::decide;
    long long budget_ = default_node_budget;
    long long nodes_ = 0;
    bool aborted_ = false;
    bool done_ = false;
    unsigned long long solutions_ = 0;
    bool have_first_ = false;
    std::vector<int> partial_;
    std::vector<int> first_;
};

// Completed design: the closed neighbourhoods plus the chosen remainder blocks.
Design assemble_design(const Graph& g, int delta, const std::vector<Block>& chosen) {
    Design d{g.order(), delta, neighborhood_blocks(g)};
    d.blocks.insert(d.blocks.end(), chosen.begin(), chosen.end());
    canonicalize(d);
    auto report = verify(d, g);
    if (!report.ok())
        fail(errc::verification_failed,
             "internal error: assembled completion failed verification: " +
                 report.violations.front().to_string());
    return d;
}

// Consistency of the linear system "each pair is covered exactly once" over
// GF(p). A 0/1 solution reduces to a solution modulo any prime, so an
// inconsistent system has no completion at all; the converse does not hold,
// in which case the search below settles the question. Refutes in one
// Gaussian elimination several unions of cycles whose search trees have tens
// of millions of nodes.
bool cover_system_inconsistent(std::size_t num_pairs, std::size_t num_rows,
                               const std::vector<std::vector<int>>& rows) {
    constexpr unsigned long long p = 1'000'000'007;
    // Dense elimination costs O(pairs^2 * rows); skip it for instances where
    // that would rival the search itself.
    if (num_pairs * num_pairs * (num_rows + 1) > 200'000'000) return false;

    // One equation per pair: the unknowns are the candidate choices, the
    // right-hand side (last entry) is one.
    std::vector<std::vector<unsigned long long>> eq(
        num_pairs, std::vector<unsigned long long>(num_rows + 1, 0));
    for (std::size_t r = 0; r < num_rows; ++r)
        for (int pair : rows[r]) eq[static_cast<std::size_t>(pair)][r] = 1;
    for (auto& row : eq) row[num_rows] = 1;

    auto modpow = [](unsigned long long base, unsigned long long exp) {
        unsigned long long acc = 1;
        for (base %= p; exp; exp >>= 1) {
            if (exp & 1) acc = acc * base % p;
            base = base * base % p;
        }
        return acc;
    };

    std::size_t rank = 0;
    for (std::size_t col = 0; col < num_rows && rank < num_pairs; ++col) {
        std::size_t pivot = rank;
        while (pivot < num_pairs && eq[pivot][col] == 0) ++pivot;
        if (pivot == num_pairs) continue;
        std::swap(eq[rank], eq[pivot]);
        unsigned long long inv = modpow(eq[rank][col], p - 2);
        for (std::size_t r = 0; r < num_pairs; ++r) {
            if (r == rank || eq[r][col] == 0) continue;
            unsigned long long f = eq[r][col] * inv % p;
            for (std::size_t c = col; c <= num_rows; ++c)
                eq[r][c] = (eq[r][c] + p - f * eq[rank][c] % p) % p;
        }
        ++rank;
    }
    if (rank == num_pairs) return false;
    for (std::size_t r = rank; r < num_pairs; ++r)
        if (eq[r][num_rows] != 0) return true;
    return false;
}

// The uncovered remainder pair with the largest index spread j-i, ties broken
// lexicographically; nullopt when every pair lies in some candidate.
std::optional<std::pair<int, int>> uncovered_pair(const CandidateSet& cs) {
    std::vector<char> covered(cs.pairs.size(), 0);
    for (const auto& c : cs.candidates)
        for (int t : c.pair_ids) covered[static_cast<std::size_t>(t)] = 1;
    std::optional<std::pair<int, int>> best;
    int best_spread = -1;
    for (std::size_t t = 0; t < cs.pairs.size(); ++t) {
        if (covered[t]) continue;
        int spread = cs.pairs[t].second - cs.pairs[t].first;
        if (spread > best_spread) {
            best_spread = spread;
            best = cs.pairs[t];
        }
    }
    return best;
}

SearchOutcome run_cover(const Graph& g, int delta, const std::vector<std::pair<int, int>>& pairs,
                        const std::vector<Block>& blocks, const std::vector<std::vector<int>>& rows,
                        CoverMode mode, long long node_budget, const std::string& stage) {
    if (node_budget <= 0) fail(errc::bad_argument, "node budget must be positive");

    if (cover_system_inconsistent(pairs.size(), blocks.size(), rows)) {
        SearchOutcome out;
        out.stage = stage;
        out.status = Status::not_exists;
        out.witness = "search space exhausted";
        if (mode == CoverMode::count) out.count = 0;
        return out;
    }

    CoverSolver solver(static_cast<int>(pairs.size()), rows);
    solver.run(mode, node_budget);

    SearchOutcome out;
    out.stage = stage;
    out.nodes = solver.nodes();
    if (solver.has_solution()) {
        out.status = Status::exists;
        std::vector<Block> chosen;
        chosen.reserve(solver.first_solution().size());
        for (int r : solver.first_solution()) chosen.push_back(blocks[static_cast<std::size_t>(r)]);
        out.design = assemble_design(g, delta, chosen);
        out.witness = std::to_string(chosen.size()) + " remainder blocks";
        if (mode == CoverMode::count) {
            if (solver.aborted())
                out.witness += "; node budget exhausted after " +
                               std::to_string(solver.solutions()) + " completions";
            else
                out.count = solver.solutions();
        }
    } else if (solver.aborted()) {
        out.status = Status::inconclusive;
        out.witness = "node budget exhausted";
    } else {
        out.status = Status::not_exists;
        out.witness = "search space exhausted";
        if (mode == CoverMode::count) out.count = 0;
    }
    return out;
}

// Enumerates partitions of `elements` (sorted) into unordered triples; calls
// `complete` on each full partition. Returns false to stop early.
template <typename Fn>
bool triple_partitions(std::vector<int>& elements, std::vector<Block>& triples, Fn&& complete) {
    if (elements.empty()) return complete(triples);
    int a = elements.front();
    for (std::size_t bi = 1; bi < elements.size(); ++bi)
        for (std::size_t ci = bi + 1; ci < elements.size(); ++ci) {
            int b = elements[bi];
            int c = elements[ci];
            std::vector<int> rest;
            rest.reserve(elements.size() - 3);
            for (std::size_t t = 1; t < elements.size(); ++t)
                if (t != bi && t != ci) rest.push_back(elements[t]);
            triples.push_back({a, b, c});
            bool keep_going = triple_partitions(rest, triples, complete);
            triples.pop_back();
            if (!keep_going) return false;
        }
    return true;
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::exists: return "Exists";
        case Status::not_exists: return "NotExists";
        case Status::inconclusive: return "Inconclusive";
    }
    fail(errc::bad_argument, "unknown status");
}

CandidateSet candidate_blocks(const Graph& g) {
    CandidateSet cs;
    cs.pairs = remainder_pairs(g);
    const int n = g.order();
    const int delta = n == 0 ? 0 : *regularity(g);
    const int k = delta + 1;

    std::vector<int> slot_to_pair(n < 2 ? 0 : pair_slot(n - 2, n - 1) + 1, -1);
    for (std::size_t t = 0; t < cs.pairs.size(); ++t)
        slot_to_pair[pair_slot(cs.pairs[t].first, cs.pairs[t].second)] = static_cast<int>(t);
    auto matrix = remainder_matrix(n, cs.pairs);

    CliqueFinder finder{n, k, matrix, slot_to_pair, cs.candidates, {}};
    for (int v = 0; v < n; ++v) {
        std::vector<int> allowed;
        for (int w = v + 1; w < n; ++w)
            if (finder.joined(v, w)) allowed.push_back(w);
        finder.current.assign(1, v);
        finder.extend(allowed);
    }
    return cs;
}

CoverInstance cover_instance(const CandidateSet& cs) {
    CoverInstance inst;
    inst.pairs = cs.pairs;
    inst.candidates.reserve(cs.candidates.size());
    for (const auto& c : cs.candidates) inst.candidates.push_back(c.block);
    inst.incidence.assign(inst.pairs.size() * inst.candidates.size(), 0);
    for (std::size_t k = 0; k < cs.candidates.size(); ++k)
        for (int t : cs.candidates[k].pair_ids)
            inst.incidence[static_cast<std::size_t>(t) * inst.candidates.size() + k] = 1;
    return inst;
}

SearchOutcome algorithm_a(const Graph& g) {
    auto cs = candidate_blocks(g);
    SearchOutcome out;
    out.stage = "A";
    if (auto witness = uncovered_pair(cs)) {
        out.status = Status::not_exists;
        out.witness = pair_text(witness->first, witness->second);
    } else {
        out.status = Status::inconclusive;
        out.witness = "every remainder pair lies in a candidate block";
    }
    return out;
}

SearchOutcome exact_cover(const Graph& g, CoverMode mode, long long node_budget) {
    auto cs = candidate_blocks(g);
    const int delta = g.order() == 0 ? 0 : *regularity(g);
    std::vector<Block> blocks;
    std::vector<std::vector<int>> rows;
    blocks.reserve(cs.candidates.size());
    rows.reserve(cs.candidates.size());
    for (const auto& c : cs.candidates) {
        blocks.push_back(c.block);
        rows.push_back(c.pair_ids);
    }
    return run_cover(g, delta, cs.pairs, blocks, rows, mode, node_budget, "cover");
}

SearchOutcome algorithm_b(const Graph& g, long long node_budget) {
    auto cs = candidate_blocks(g);
    const int delta = g.order() == 0 ? 0 : *regularity(g);
    if (auto witness = uncovered_pair(cs)) {
        SearchOutcome out;
        out.stage = "B";
        out.status = Status::not_exists;
        out.witness = pair_text(witness->first, witness->second);
        return out;
    }
    // Work from the explicit 0/1 matrix: read each candidate's pair set back
    // out of the incidence rows before solving.
    auto inst = cover_instance(cs);
    std::vector<std::vector<int>> rows(inst.candidates.size());
    for (std::size_t k = 0; k < inst.candidates.size(); ++k)
        for (std::size_t t = 0; t < inst.pairs.size(); ++t)
            if (inst.entry(static_cast<int>(t), static_cast<int>(k)))
                rows[k].push_back(static_cast<int>(t));
    return run_cover(g, delta, inst.pairs, inst.candidates, rows, CoverMode::decide, node_budget,
                     "B");
}

SearchOutcome algorithm_c(const Graph& g) {
    auto pairs = remainder_pairs(g);
    const int n = g.order();
    const int delta = n == 0 ? 0 : *regularity(g);
    if (n != (delta + 1) * (delta + 1))
        fail(errc::precondition_violated,
             "applies only to delta-regular graphs on (delta+1)^2 vertices");
    auto matrix = remainder_matrix(n, pairs);
    auto joined = [&](int u, int v) {
        return matrix[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(v)] != 0;
    };

    std::vector<int> partners;
    for (auto [i, j] : pairs)
        if (i == 0) partners.push_back(j);
    SearchOutcome out;
    out.stage = "C";
    if (std::cmp_not_equal(partners.size(), 2 * delta))
        fail(errc::precondition_violated, "vertex 0 must have exactly 2*delta remainder partners");
    if (delta == 0) {
        out.status = Status::inconclusive;
        out.witness = "complete design, nothing to refute";
        return out;
    }

    auto side_valid = [&](const std::vector<int>& side) {
        for (std::size_t a = 0; a < side.size(); ++a)
            for (std::size_t b = a + 1; b < side.size(); ++b)
                if (!joined(side[a], side[b])) return false;
        return true;
    };

    // Partitions of the 2*delta partners into two delta-sets: every delta-subset
    // containing the first partner, in lexicographic order.
    const int m = 2 * delta;
    long long examined = 0;
    std::vector<int> first_side, second_side;
    std::vector<int> idx(static_cast<std::size_t>(delta));
    for (int i = 0; i < delta; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        first_side.clear();
        second_side.clear();
        std::vector<char> used(static_cast<std::size_t>(m), 0);
        for (int i : idx) {
            first_side.push_back(partners[static_cast<std::size_t>(i)]);
            used[static_cast<std::size_t>(i)] = 1;
        }
        for (int i = 0; i < m; ++i)
            if (!used[static_cast<std::size_t>(i)]) second_side.push_back(partners[static_cast<std::size_t>(i)]);
        ++examined;
        if (side_valid(first_side) && side_valid(second_side)) {
            out.status = Status::inconclusive;
            out.nodes = examined;
            auto block_text = [](const std::vector<int>& side) {
                std::string s = "{0";
                for (int v : side) s += "," + std::to_string(v);
                return s + "}";
            };
            out.witness = "both " + block_text(first_side) + " and " + block_text(second_side) +
                          " are candidate blocks";
            return out;
        }
        // next delta-subset of {0..m-1} that keeps index 0 fixed
        int pos = delta - 1;
        while (pos >= 1 && idx[static_cast<std::size_t>(pos)] == m - delta + pos) --pos;
        if (pos < 1) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < delta; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    out.status = Status::not_exists;
    out.nodes = examined;
    out.witness = "examined " + std::to_string(examined) + " partitions";
    return out;
}

SearchOutcome algorithm_d(const Graph& g) {
    auto pairs = remainder_pairs(g);
    const int n = g.order();
    const int delta = n == 0 ? 0 : *regularity(g);
    if (n != 22 || delta != 3)
        fail(errc::precondition_violated, "applies only to 3-regular graphs on 22 vertices");
    auto matrix = remainder_matrix(n, pairs);
    auto joined = [&](int u, int v) {
        return matrix[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(v)] != 0;
    };

    std::vector<int> partners0;
    for (auto [i, j] : pairs)
        if (i == 0) partners0.push_back(j);
    if (partners0.size() != 12)
        fail(errc::precondition_violated, "vertex 0 must have exactly twelve remainder partners");

    // Second iteration vertex: smallest vertex outside {0} and the partner set.
    int t2 = -1;
    {
        std::vector<char> excluded(static_cast<std::size_t>(n), 0);
        excluded[0] = 1;
        for (int v : partners0) excluded[static_cast<std::size_t>(v)] = 1;
        for (int v = 0; v < n; ++v)
            if (!excluded[static_cast<std::size_t>(v)]) {
                t2 = v;
                break;
            }
    }
    std::vector<int> partners2;
    for (int v = 0; v < n; ++v)
        if (v != t2 && joined(t2, v)) partners2.push_back(v);

    auto triples_valid = [&](const std::vector<Block>& triples, const std::vector<char>* banned) {
        for (const auto& t : triples)
            for (std::size_t a = 0; a < t.size(); ++a)
                for (std::size_t b = a + 1; b < t.size(); ++b) {
                    if (!joined(t[a], t[b])) return false;
                    if (banned &&
                        (*banned)[pair_slot(std::min(t[a], t[b]), std::max(t[a], t[b]))])
                        return false;
                }
        return true;
    };

    long long level1 = 0;
    long long level2 = 0;
    bool viable = false;
    std::vector<Block> stack1;
    std::vector<int> elems0 = partners0;
    triple_partitions(elems0, stack1, [&](const std::vector<Block>& first_blocks) {
        ++level1;
        if (!triples_valid(first_blocks, nullptr)) return true;
        // The four blocks {0} + triple cover the twelve pairs internal to the
        // triples; those cannot be reused by the blocks through the second
        // vertex.
        std::vector<char> banned(pair_slot(n - 2, n - 1) + 1, 0);
        for (const auto& t : first_blocks)
            for (std::size_t a = 0; a < t.size(); ++a)
                for (std::size_t b = a + 1; b < t.size(); ++b)
                    banned[pair_slot(std::min(t[a], t[b]), std::max(t[a], t[b]))] = 1;
        std::vector<Block> stack2;
        std::vector<int> elems2 = partners2;
        triple_partitions(elems2, stack2, [&](const std::vector<Block>& second_blocks) {
            ++level2;
            if (triples_valid(second_blocks, &banned)) {
                viable = true;
                return false;
            }
            return true;
        });
        return !viable;
    });

    SearchOutcome out;
    out.stage = "D";
    out.nodes = level1 + level2;
    if (viable) {
        out.status = Status::inconclusive;
        out.witness = "vertices 0 and " + std::to_string(t2) + " both remain completable";
    } else {
        out.status = Status::not_exists;
        out.witness = "examined " + std::to_string(level1) + " partitions at vertex 0";
        if (level2 > 0)
            out.witness += " and " + std::to_string(level2) + " continuations at vertex " +
                           std::to_string(t2);
    }
    return out;
}

}  // namespace rgd
