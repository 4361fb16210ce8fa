#pragma once

#include <utility>
#include <vector>

#include "develop.hpp"
#include "graph.hpp"

namespace rgd {

// The differences a cycle design on n = 6m+5 points must realise once each:
// {3..3m+2} when m = 0,1 (mod 4), {3..3m+1} u {3m+3} when m = 2,3 (mod 4).
// (3m+3 and 3m+2 are the same difference mod n.) Sorted ascending.
std::vector<int> target_differences(int m);

// Partition of target_differences(m) into m triples {x, z-x, z}, returned as
// (x, z) sorted by z. Backtracking that always completes the largest unused
// difference first, trying balanced splits first and falling back to seeded
// random restarts; the result is a fixed function of m.
std::vector<std::pair<int, int>> find_difference_triples(int m);

// Base blocks for the n-cycle design: the embedded table for
// n in {5,15,17,21,23,27,29,33,39}, otherwise {0,1,n-1} plus {0,x,z} per
// difference triple with step 1 (n = 5 mod 6, n >= 35).
BaseBlockSet cycle_design_base_blocks(int n);

// Design plus its graph, the n-cycle. No design exists for n in {9, 11};
// n = 3 (mod 6) beyond 39 is reached through GDD composition instead and
// reports Unsupported here.
std::pair<Design, Graph> cycle_design(int n);

}  // namespace rgd
