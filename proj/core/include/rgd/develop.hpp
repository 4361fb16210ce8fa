#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "design.hpp"

namespace rgd {

// Base blocks developed by repeated translation x -> x + s (mod n).
struct BaseBlockSet {
    int n = 0;
    int s = 1;
    std::vector<Block> base_blocks;
};

int full_orbit_length(int n, int s);
// Distinct translates of `block` in generation order; shorter than
// full_orbit_length(n, s) exactly when the orbit is short.
std::vector<Block> orbit(const Block& block, int n, int s);

// Develops every base block and collects the orbits into a design with
// delta = block size - 1. Any block generated twice is an error.
Design develop(const BaseBlockSet& bbs);

enum class TableFamily { delta2, delta3, delta4 };
TableFamily table_family_from_string(const std::string& name);
std::string to_string(TableFamily family);

// Orders with an embedded base-block table, ascending.
const std::vector<int>& builtin_orders(TableFamily family);
// Embedded tables: delta2 covers the 2-regular orders 5..39 not handled by
// difference triples, delta3 covers 10 and 40..202 step 6, delta4 covers
// 105 and 117.
BaseBlockSet builtin_table(int order, TableFamily family);

// Text format: "n s" header line, one base block per line, '#' comments.
std::string to_text(const BaseBlockSet& bbs);
BaseBlockSet base_blocks_from_text(std::string_view text);

}  // namespace rgd
