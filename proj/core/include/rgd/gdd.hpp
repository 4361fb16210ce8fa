#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "design.hpp"
#include "graph.hpp"

namespace rgd {

// Group divisible design: the groups partition the points, blocks of size k
// meet every group at most once, and cross-group pairs lie in exactly one block.
struct Gdd {
    int k = 0;
    std::vector<std::vector<int>> groups;
    std::vector<Block> blocks;

    int point_count() const;
    // (group size, multiplicity) pairs, sorted by size.
    std::vector<std::pair<int, int>> type_signature() const;
};

VerificationReport verify_gdd(const Gdd& d);

// 3-GDD of type g^3 on points 0..3g-1 with consecutive groups of size g and
// the g^2 blocks {i, g+j, 2g + ((i+j) mod g)}.
Gdd gdd_g3(int g);

// JSON object {"k": .., "groups": [[..], ..], "blocks": [[..], ..]}.
std::string to_json(const Gdd& d);
// Parses and checks well-formedness (point ranges, block size present);
// covering properties are checked separately by verify_gdd.
Gdd gdd_from_json(std::string_view text);

// Wilson's fundamental construction with complete designs as fills: keep the
// GDD blocks, copy an ingredient design and its graph onto every group
// (ingredient point i maps to the i-th smallest point of the group), and
// verify the union against the disjoint union of the relabelled graphs.
// Ingredients are keyed by group size and must have block size d.k.
std::pair<Design, Graph> wilson_fill(const Gdd& d,
                                     const std::map<int, std::pair<Design, Graph>>& ingredients);

}  // namespace rgd
