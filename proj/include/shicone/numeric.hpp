#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace shicone {

// All counting is exact; region counts and determinant cofactors overflow
// 64 bits already for moderate ranks.
using Int = boost::multiprecision::cpp_int;

// C(n, k) with the usual combinatorial guard: 0 whenever k < 0 or k > n
// (which covers every negative n, since k < 0 or k >= 0 > n).
inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

// Exact quotient a / b; throws std::logic_error if b == 0 or b does not
// divide a. Used by the fraction-free determinant, where divisibility is
// guaranteed by construction, so a failure indicates a real bug.
inline Int div_exact(const Int& a, const Int& b) {
    if (b == 0) throw std::logic_error("div_exact: division by zero");
    Int q = a / b;
    if (q * b != a) throw std::logic_error("div_exact: inexact division");
    return q;
}

inline std::string to_string(const Int& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace shicone
