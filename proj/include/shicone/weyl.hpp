#pragma once

#include "shicone/root_system.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace shicone {

// A Weyl group element represented by its action on the positive roots:
// img[r] is a signed 1-based root index, +(k+1) for alpha_k and -(k+1) for
// -alpha_k. Elements built from different words of the same group element
// compare equal.
struct WeylElement {
    std::vector<int> img;

    bool operator==(const WeylElement&) const = default;

    // Number of positive roots sent to negatives; equals the Coxeter length.
    int length() const {
        int l = 0;
        for (int s : img)
            if (s < 0) ++l;
        return l;
    }
};

// Parses "5 2 4 3 1" or "5,2,4,3,1" into 1-based generator letters; the empty
// string is the identity. Letters outside 1..rank raise std::invalid_argument.
std::vector<int> parse_word(const std::string& text, int rank);
std::string word_to_string(const std::vector<int>& word); // "e" for the identity

WeylElement identity_element(const RootSystem& sys);

// w = s_{i1} ... s_{im} for word = (i1, ..., im); the word need not be reduced.
WeylElement element_of(const RootSystem& sys, const std::vector<int>& word);

WeylElement inverse(const WeylElement& w);

// Right multiplication by a simple reflection: w * s_i.
WeylElement right_multiply(const RootSystem& sys, const WeylElement& w, int i);

// N(w) = { alpha > 0 : w^{-1}(alpha) < 0 }, as sorted root indices.
std::vector<int> inversion_set(const RootSystem& sys, const WeylElement& w);

// The set the region-counting matrix is built from: N(w^{-1}), read directly
// off w's own action as { alpha > 0 : w(alpha) < 0 }.
std::vector<int> inverse_inversion_set(const WeylElement& w);

// Breadth-first enumeration of the whole group; elements arrive in order of
// length, with a shortest witness word each (reconstructable via word_of).
struct GroupEnumeration {
    std::vector<WeylElement> elements;
    std::vector<int> parent; // index of element one letter shorter, -1 for identity
    std::vector<int> letter; // last letter of the witness word, 0 for identity
    std::vector<int> length;

    std::vector<int> word_of(int idx) const;
};

// Throws CapExceeded if the group turns out to be larger than max_order.
GroupEnumeration enumerate_group(const RootSystem& sys, std::uint64_t max_order);

} // namespace shicone
