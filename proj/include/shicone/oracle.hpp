#pragma once

#include "shicone/digraph.hpp"
#include "shicone/numeric.hpp"
#include "shicone/poly.hpp"
#include "shicone/root_system.hpp"

#include <vector>

namespace shicone {

// Brute-force reference counters. These are deliberately independent of the
// determinantal machinery: antichains are enumerated directly in the root
// poset, and paths are enumerated one by one in the digraph.

struct AntichainCount {
    Int total = 0;
    std::vector<Int> by_size; // by_size[k] = antichains of cardinality k
};

// Counts antichains of the root poset restricted to roots r with !excluded[r].
// Requires at most 64 positive roots.
AntichainCount count_antichains(const RootSystem& sys, const std::vector<char>& excluded);

struct PathCount {
    Int total = 0;
    Poly corner_poly; // paths graded by number of designated corners traversed
};

// Counts source-to-sink paths of g that avoid every forbidden path: a path is
// discarded when any forbidden sequence appears as a contiguous subpath.
// Throws CapExceeded when more than `cap` surviving paths are found.
PathCount count_avoiding_paths(const ShiDigraph& g, const std::vector<PathSeq>& forbidden,
                               long long cap = 1000000);

// Sum over avoiding source-to-sink paths of the product of edge weights.
// Weights are keyed by (from, to); absent edges default to weight 1.
Int weighted_path_sum(const SimpleDag& dag, int source, int sink,
                      const std::vector<PathSeq>& forbidden,
                      const std::vector<std::vector<Int>>& edge_weight);

} // namespace shicone
