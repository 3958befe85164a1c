#include "shicone/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace shicone {

namespace {

// Bonds of the Dynkin diagram as (i, j, a_ij, a_ji), 1-based, where
// a_ij = pairing of alpha_i against the coroot of alpha_j.
std::vector<std::array<int, 4>> dynkin_bonds(char family, int n) {
    std::vector<std::array<int, 4>> bonds;
    auto single = [&](int i, int j) { bonds.push_back({i, j, -1, -1}); };
    switch (family) {
    case 'A':
        for (int i = 1; i < n; ++i) single(i, i + 1);
        break;
    case 'B': // alpha_n short
        for (int i = 1; i + 1 < n; ++i) single(i, i + 1);
        bonds.push_back({n - 1, n, -2, -1});
        break;
    case 'C': // alpha_n long
        for (int i = 1; i + 1 < n; ++i) single(i, i + 1);
        bonds.push_back({n - 1, n, -1, -2});
        break;
    case 'D':
        for (int i = 1; i + 1 < n; ++i) single(i, i + 1);
        single(n - 2, n);
        break;
    case 'E':
        single(1, 3);
        single(3, 4);
        single(2, 4);
        for (int i = 4; i < n; ++i) single(i, i + 1);
        break;
    case 'F':
        // Numbered so that alpha_1, alpha_2 are short and alpha_3, alpha_4
        // long, with s_2(alpha_3) = alpha_3 + 2 alpha_2; this matches the
        // shipped digraph box labels.
        single(1, 2);
        bonds.push_back({2, 3, -1, -2});
        single(3, 4);
        break;
    case 'G': // alpha_1 short: s_1(alpha_2) = alpha_2 + 3 alpha_1
        bonds.push_back({1, 2, -1, -3});
        break;
    default:
        throw std::invalid_argument("unknown family");
    }
    return bonds;
}

} // namespace

std::pair<char, int> parse_type(const std::string& type_label) {
    if (type_label.size() < 2)
        throw std::invalid_argument("type label must look like A5, B3, E6: got '" +
                                    type_label + "'");
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(type_label[0])));
    if (family < 'A' || family > 'G')
        throw std::invalid_argument("unknown family '" + std::string(1, type_label[0]) +
                                    "' in type label '" + type_label + "'");
    int rank = 0;
    for (std::size_t i = 1; i < type_label.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(type_label[i])))
            throw std::invalid_argument("malformed rank in type label '" + type_label + "'");
        rank = rank * 10 + (type_label[i] - '0');
        if (rank > 64)
            throw std::invalid_argument("rank out of range in '" + type_label + "'");
    }
    auto fail = [&](const char* need) {
        throw std::invalid_argument(std::string("rank constraint violated for family ") +
                                    family + ": need " + need + ", got " +
                                    std::to_string(rank));
    };
    switch (family) {
    case 'A': if (rank < 1) fail("rank >= 1"); break;
    case 'B': if (rank < 2) fail("rank >= 2"); break;
    case 'C': if (rank < 2) fail("rank >= 2"); break;
    case 'D': if (rank < 3) fail("rank >= 3"); break;
    case 'E': if (rank < 6 || rank > 8) fail("rank in {6,7,8}"); break;
    case 'F': if (rank != 4) fail("rank = 4"); break;
    case 'G': if (rank != 2) fail("rank = 2"); break;
    }
    return {family, rank};
}

int RootSystem::index_of(const std::vector<int>& coeffs) const {
    auto it = index_.find(coeffs);
    return it == index_.end() ? -1 : it->second;
}

bool RootSystem::poset_leq(int a, int b) const {
    const auto& ra = roots[a];
    const auto& rb = roots[b];
    for (int i = 0; i < rank; ++i)
        if (rb[i] < ra[i]) return false;
    return true;
}

std::vector<int> RootSystem::reflect(int i, const std::vector<int>& coeffs) const {
    // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
    long long pairing = 0;
    for (int j = 0; j < rank; ++j) pairing += static_cast<long long>(coeffs[j]) * cartan[j][i - 1];
    std::vector<int> out = coeffs;
    out[i - 1] -= static_cast<int>(pairing);
    return out;
}

int RootSystem::reflect_root(int i, int r) const { return srefl_[i - 1][r]; }

RootSystem build_root_system(const std::string& type_label) {
    auto [family, rank] = parse_type(type_label);
    RootSystem sys;
    sys.family = family;
    sys.rank = rank;
    sys.label = std::string(1, family) + std::to_string(rank);

    sys.cartan.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) sys.cartan[i][i] = 2;
    for (const auto& [i, j, aij, aji] : dynkin_bonds(family, rank)) {
        sys.cartan[i - 1][j - 1] = aij;
        sys.cartan[j - 1][i - 1] = aji;
    }

    // Close the simple roots under simple reflections, keeping positives.
    std::set<std::vector<int>> pos;
    std::vector<std::vector<int>> work;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        pos.insert(e);
        work.push_back(std::move(e));
    }
    while (!work.empty()) {
        std::vector<int> r = std::move(work.back());
        work.pop_back();
        for (int i = 1; i <= rank; ++i) {
            std::vector<int> s = sys.reflect(i, r);
            bool nonneg = std::all_of(s.begin(), s.end(), [](int c) { return c >= 0; });
            if (nonneg && pos.insert(s).second) work.push_back(std::move(s));
        }
    }

    sys.roots.assign(pos.begin(), pos.end());
    std::sort(sys.roots.begin(), sys.roots.end(), [](const auto& a, const auto& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    for (int r = 0; r < sys.num_positive(); ++r) {
        sys.index_[sys.roots[r]] = r;
        sys.heights.push_back(std::accumulate(sys.roots[r].begin(), sys.roots[r].end(), 0));
    }

    // srefl_[i-1][r]: signed index of s_i(alpha_r).
    sys.srefl_.assign(rank, std::vector<int>(sys.num_positive(), 0));
    for (int i = 1; i <= rank; ++i) {
        for (int r = 0; r < sys.num_positive(); ++r) {
            std::vector<int> s = sys.reflect(i, sys.roots[r]);
            bool nonneg = std::all_of(s.begin(), s.end(), [](int c) { return c >= 0; });
            if (!nonneg)
                for (auto& c : s) c = -c;
            int idx = sys.index_of(s);
            if (idx < 0) throw std::logic_error("reflection left the root system");
            sys.srefl_[i - 1][r] = nonneg ? idx + 1 : -(idx + 1);
        }
    }

    // Exponents = conjugate partition of the height distribution.
    int max_h = *std::max_element(sys.heights.begin(), sys.heights.end());
    std::vector<int> by_height(max_h + 1, 0);
    for (int h : sys.heights) ++by_height[h];
    for (int j = 1; j <= rank; ++j) {
        int e = 0;
        for (int h = 1; h <= max_h; ++h)
            if (by_height[h] >= j) ++e;
        sys.exponents.push_back(e);
    }
    std::sort(sys.exponents.begin(), sys.exponents.end());
    if (std::accumulate(sys.exponents.begin(), sys.exponents.end(), 0) != sys.num_positive())
        throw std::logic_error("exponent/positive-root count mismatch");

    if ((2 * sys.num_positive()) % rank != 0)
        throw std::logic_error("Coxeter number is not integral");
    sys.coxeter_number = 2 * sys.num_positive() / rank;

    sys.weyl_order = 1;
    Int cat_num = 1;
    for (int e : sys.exponents) {
        sys.weyl_order *= e + 1;
        cat_num *= e + sys.coxeter_number + 1;
    }
    sys.catalan = div_exact(cat_num, sys.weyl_order); // non-integral would be a bug

    return sys;
}

namespace {

// Concatenated-digit index pairs as in a_{13}; falls back to a spaced form
// when an index needs more than one digit.
std::string summand(int i, int j) {
    if (i <= 9 && j <= 9) return std::to_string(i) + std::to_string(j);
    return std::to_string(i) + " " + std::to_string(j);
}

} // namespace

std::string RootSystem::root_label(int r) const {
    const std::vector<int>& c = roots[r];
    const int n = rank;
    auto raw = [&]() {
        std::string s = "(";
        for (int i = 0; i < n; ++i) {
            if (i) s += " ";
            s += std::to_string(c[i]);
        }
        return s + ")";
    };
    if (family == 'E' || family == 'F' || family == 'G') return raw();

    // 1-based coefficient access and an exact pattern matcher: matches(i, k, ...)
    // tests c == [0 on 1..i-1] [1 on i..k-1] [2 on k..hi2] then a fixed tail.
    auto at = [&](int i) { return c[i - 1]; };
    auto is_pattern = [&](int i, int k, int hi2, std::vector<int> tail) {
        // zeros before i, ones on i..k-1, twos on k..hi2, then `tail` up to n
        int p = 1;
        for (; p < i; ++p)
            if (at(p) != 0) return false;
        for (; p < k; ++p)
            if (at(p) != 1) return false;
        for (; p <= hi2; ++p)
            if (at(p) != 2) return false;
        for (int t = 0; p <= n; ++p, ++t)
            if (t >= static_cast<int>(tail.size()) || at(p) != tail[t]) return false;
        return true;
    };

    // Interval a_{ij}: 1s on i..j, zeros elsewhere. Covers all of family A and
    // the simple-interval roots of B/C/D (including D's a_{i,n} through the fork).
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (is_pattern(i, j + 1, j, std::vector<int>(n - j, 0)))
                return "a_{" + summand(i, j) + "}";

    if (family == 'B') {
        // alpha_{i..n} + alpha_{k..n}: 1 on i..k-1, 2 on k..n.
        for (int k = 2; k <= n; ++k)
            for (int i = 1; i < k; ++i)
                if (is_pattern(i, k, n, {}))
                    return "a_{" + summand(i, n) + "," + summand(k, n) + "}";
    }
    if (family == 'C') {
        // alpha_{i..n} + alpha_{k..n-1}: 1 on i..k-1, 2 on k..n-1, 1 at n.
        for (int k = 1; k <= n - 1; ++k)
            for (int i = 1; i <= k; ++i)
                if (is_pattern(i, k, n - 1, {1}))
                    return "a_{" + summand(i, n) + "," + summand(k, n - 1) + "}";
    }
    if (family == 'D') {
        // alpha_{j..n-2} + alpha_n: 1 on j..n-2, 0 at n-1, 1 at n.
        for (int j = 1; j <= n - 2; ++j)
            if (is_pattern(j, n - 1, n - 2, {0, 1}))
                return "a_{" + summand(j, n - 2) + "," + summand(n, n) + "}";
        // alpha_{i..n} + alpha_{k..n-2}: 1 on i..k-1, 2 on k..n-2, 1 at n-1 and n.
        for (int k = 2; k <= n - 2; ++k)
            for (int i = 1; i < k; ++i)
                if (is_pattern(i, k, n - 2, {1, 1}))
                    return "a_{" + summand(i, n) + "," + summand(k, n - 2) + "}";
    }
    return raw();
}

} // namespace shicone
