#include "rgd/difference.hpp"

#include <algorithm>
#include <random>

#include "rgd/errors.hpp"

namespace rgd {

std::vector<int> target_differences(int m) {
    if (m < 5) fail(errc::bad_argument, "difference triples need m >= 5");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(3 * m));
    if (m % 4 <= 1) {
        for (int d = 3; d <= 3 * m + 2; ++d) out.push_back(d);
    } else {
        for (int d = 3; d <= 3 * m + 1; ++d) out.push_back(d);
        out.push_back(3 * m + 3);
    }
    return out;
}

namespace {

// Smaller parts x of the valid splits z = x + (z - x) against the sorted
// pool, ascending. 2x < z keeps the parts distinct.
std::vector<int> split_parts(const std::vector<int>& pool, int z) {
    std::vector<int> xs;
    for (std::size_t i = 0; i < pool.size() && 2 * pool[i] < z; ++i)
        if (std::binary_search(pool.begin(), pool.end(), z - pool[i])) xs.push_back(pool[i]);
    return xs;
}

// Partitions the remaining differences into triples {x, y, x+y}. The largest
// remaining element can only be a sum, so complete it first. Balanced splits
// lead to a solution with little backtracking for most orders; `rng`, when
// given, reshuffles the split order instead for the restart passes below.
bool partition_triples(std::vector<int>& pool, std::vector<std::pair<int, int>>& out,
                       long long& budget, std::mt19937_64* rng) {
    if (pool.empty()) return true;
    if (--budget < 0) return false;
    const int z = pool.back();
    pool.pop_back();
    auto xs = split_parts(pool, z);
    if (rng)
        std::shuffle(xs.begin(), xs.end(), *rng);
    else
        std::reverse(xs.begin(), xs.end());
    for (int x : xs) {
        const int y = z - x;
        std::vector<int> next;
        next.reserve(pool.size() - 2);
        for (int v : pool)
            if (v != x && v != y) next.push_back(v);
        if (partition_triples(next, out, budget, rng)) {
            out.emplace_back(x, z);
            pool.push_back(z);
            return true;
        }
        if (budget < 0) break;
    }
    pool.push_back(z);
    return false;
}

}  // namespace

std::vector<std::pair<int, int>> find_difference_triples(int m) {
    std::vector<std::pair<int, int>> out;
    // Backtracking under a single fixed ordering is fast for most m but hits
    // rare orders whose search trees have heavy tails. The first pass tries
    // the most balanced split first; if its node budget runs out, seeded
    // shuffles with doubling budgets restart the search. Every pass is a
    // fixed function of m, so the result is reproducible.
    for (int attempt = 0; attempt < 64 && out.empty(); ++attempt) {
        std::vector<int> pool = target_differences(m);
        long long budget = 50'000LL << std::min(attempt, 12);
        if (attempt == 0) {
            partition_triples(pool, out, budget, nullptr);
        } else {
            std::mt19937_64 rng(1000003ULL * static_cast<unsigned long long>(m) +
                                static_cast<unsigned long long>(attempt));
            partition_triples(pool, out, budget, &rng);
        }
    }
    if (out.empty())
        fail(errc::generation_failed,
             "difference triple search exhausted its budget for m = " + std::to_string(m));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

BaseBlockSet cycle_design_base_blocks(int n) {
    if (n < 5 || (n % 6 != 3 && n % 6 != 5))
        fail(errc::bad_argument, "cycle designs need n >= 5 with n = 3 or 5 (mod 6)");
    if (n == 9 || n == 11)
        fail(errc::no_design_exists, "no design exists for the " + std::to_string(n) + "-cycle");
    const auto& table_orders = builtin_orders(TableFamily::delta2);
    if (std::binary_search(table_orders.begin(), table_orders.end(), n))
        return builtin_table(n, TableFamily::delta2);
    if (n % 6 == 3)
        fail(errc::unsupported,
             "order " + std::to_string(n) + " = 3 (mod 6) is built by GDD composition");
    BaseBlockSet bbs{n, 1, {{0, 1, n - 1}}};
    for (auto [x, z] : find_difference_triples((n - 5) / 6)) bbs.base_blocks.push_back({0, x, z});
    return bbs;
}

std::pair<Design, Graph> cycle_design(int n) {
    return {develop(cycle_design_base_blocks(n)), cycle(n)};
}

}  // namespace rgd
