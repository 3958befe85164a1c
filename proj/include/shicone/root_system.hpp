#pragma once

#include "shicone/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace shicone {

// A crystallographic root system of type A-G, with its positive roots expressed
// as coefficient vectors over the simple roots. Positive roots are generated by
// closing the simple roots under simple reflections and are stored sorted by
// (height, coefficient vector lexicographically ascending); in particular the
// first `rank` entries are the simple roots.
struct RootSystem {
    std::string label;  // normalized, e.g. "B4"
    char family = 0;    // 'A'..'G'
    int rank = 0;

    // cartan[i][j] = pairing of alpha_i against the coroot of alpha_j,
    // so s_j(alpha_i) = alpha_i - cartan[i][j] * alpha_j. 0-indexed.
    std::vector<std::vector<int>> cartan;

    std::vector<std::vector<int>> roots; // positive roots, coeff vectors
    std::vector<int> heights;            // coefficient sums, parallel to roots

    std::vector<int> exponents;          // ascending
    int coxeter_number = 0;
    Int weyl_order;
    Int catalan; // number of antichains in the positive-root poset

    int num_positive() const { return static_cast<int>(roots.size()); }

    // Index of a coefficient vector among the positive roots, or -1.
    int index_of(const std::vector<int>& coeffs) const;

    // beta <= gamma in root order iff gamma - beta has nonnegative coefficients.
    bool poset_leq(int a, int b) const;
    bool comparable(int a, int b) const { return poset_leq(a, b) || poset_leq(b, a); }

    // s_i applied to an arbitrary integer combination (i is 1-based).
    std::vector<int> reflect(int i, const std::vector<int>& coeffs) const;

    // s_i applied to the positive root of index r, as a signed 1-based index:
    // +(k+1) means alpha_k, -(k+1) means -alpha_k.
    int reflect_root(int i, int r) const;

    // Human-readable name for a positive root: interval and interval-sum
    // shorthand for families A/B/C/D (e.g. a_{13}, a_{34,44}), raw coefficient
    // vectors like (1 2 1 0) for E/F/G.
    std::string root_label(int r) const;

private:
    std::map<std::vector<int>, int> index_;
    std::vector<std::vector<int>> srefl_; // srefl_[i-1][r] = reflect_root(i, r)
    friend RootSystem build_root_system(const std::string& type_label);
};

// Parses a type label such as "A5", "b3", "E6" (case-insensitive). Throws
// std::invalid_argument for malformed labels or ranks outside
// A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2.
std::pair<char, int> parse_type(const std::string& type_label);

RootSystem build_root_system(const std::string& type_label);

} // namespace shicone
