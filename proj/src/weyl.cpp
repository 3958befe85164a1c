#include "shicone/weyl.hpp"

#include "shicone/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace shicone {

std::vector<int> parse_word(const std::string& text, int rank) {
    std::string cleaned = text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    {
        // accept the identity spelling produced by word_to_string
        std::istringstream probe(cleaned);
        std::string first, extra;
        if (probe >> first && first == "e" && !(probe >> extra)) return {};
    }
    std::istringstream is(cleaned);
    std::vector<int> word;
    std::string tok;
    while (is >> tok) {
        std::size_t pos = 0;
        int letter;
        try {
            letter = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("word letter '" + tok + "' is not an integer");
        }
        if (pos != tok.size())
            throw std::invalid_argument("word letter '" + tok + "' is not an integer");
        if (letter < 1 || letter > rank)
            throw std::invalid_argument("word letter " + std::to_string(letter) +
                                        " outside 1.." + std::to_string(rank));
        word.push_back(letter);
    }
    return word;
}

std::string word_to_string(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(word[i]);
    }
    return s;
}

WeylElement identity_element(const RootSystem& sys) {
    WeylElement w;
    w.img.resize(sys.num_positive());
    for (int r = 0; r < sys.num_positive(); ++r) w.img[r] = r + 1;
    return w;
}

WeylElement right_multiply(const RootSystem& sys, const WeylElement& w, int i) {
    // (w s_i)(alpha_r) = w(s_i(alpha_r))
    WeylElement out;
    out.img.resize(w.img.size());
    for (std::size_t r = 0; r < w.img.size(); ++r) {
        int s = sys.reflect_root(i, static_cast<int>(r));
        int t = w.img[std::abs(s) - 1];
        out.img[r] = (s < 0) ? -t : t;
    }
    return out;
}

WeylElement element_of(const RootSystem& sys, const std::vector<int>& word) {
    WeylElement w = identity_element(sys);
    for (int letter : word) w = right_multiply(sys, w, letter);
    return w;
}

WeylElement inverse(const WeylElement& w) {
    WeylElement out;
    out.img.resize(w.img.size());
    for (std::size_t r = 0; r < w.img.size(); ++r) {
        int s = w.img[r];
        if (s > 0)
            out.img[s - 1] = static_cast<int>(r) + 1;
        else
            out.img[-s - 1] = -(static_cast<int>(r) + 1);
    }
    return out;
}

std::vector<int> inversion_set(const RootSystem& sys, const WeylElement& w) {
    (void)sys;
    return inverse_inversion_set(inverse(w));
}

std::vector<int> inverse_inversion_set(const WeylElement& w) {
    std::vector<int> out;
    for (std::size_t r = 0; r < w.img.size(); ++r)
        if (w.img[r] < 0) out.push_back(static_cast<int>(r));
    return out;
}

std::vector<int> GroupEnumeration::word_of(int idx) const {
    std::vector<int> w;
    for (int at = idx; parent[at] >= 0; at = parent[at]) w.push_back(letter[at]);
    std::reverse(w.begin(), w.end());
    return w;
}

GroupEnumeration enumerate_group(const RootSystem& sys, std::uint64_t max_order) {
    GroupEnumeration g;
    // Identity is determined by, and elements are deduplicated on, the images
    // of the simple roots alone (they determine the whole action).
    auto key_of = [&](const WeylElement& w) {
        return std::vector<int>(w.img.begin(), w.img.begin() + sys.rank);
    };
    std::map<std::vector<int>, int> seen;

    g.elements.push_back(identity_element(sys));
    g.parent.push_back(-1);
    g.letter.push_back(0);
    g.length.push_back(0);
    seen[key_of(g.elements[0])] = 0;

    for (std::size_t head = 0; head < g.elements.size(); ++head) {
        for (int i = 1; i <= sys.rank; ++i) {
            WeylElement next = right_multiply(sys, g.elements[head], i);
            auto [it, fresh] = seen.emplace(key_of(next), static_cast<int>(g.elements.size()));
            if (!fresh) continue;
            if (g.elements.size() >= max_order)
                throw CapExceeded("group order of " + sys.label + " exceeds cap of " +
                                  std::to_string(max_order) + " elements");
            g.elements.push_back(std::move(next));
            g.parent.push_back(static_cast<int>(head));
            g.letter.push_back(i);
            g.length.push_back(g.length[head] + 1);
        }
    }
    return g;
}

} // namespace shicone
