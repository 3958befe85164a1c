#pragma once

#include "shicone/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace shicone {

// Dense univariate polynomial over Int, indeterminate conventionally called t.
// Coefficients are stored low degree first with no trailing zeros; the zero
// polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    Poly(Int constant) { // implicit on purpose: lets ring code mix Int and Poly
        if (constant != 0) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly t() { return Poly(std::vector<Int>{0, 1}); }
    static Poly monomial(std::size_t k, Int coeff = 1) {
        std::vector<Int> c(k + 1);
        c[k] = std::move(coeff);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Int eval(const Int& x) const {
        Int r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    // Exact division; throws std::logic_error when the divisor is zero or the
    // division leaves a remainder (which would mean the fraction-free
    // elimination invariant was violated).
    friend Poly div_exact(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::logic_error("Poly div_exact: division by zero");
        if (a.is_zero()) return Poly();
        if (a.c_.size() < b.c_.size())
            throw std::logic_error("Poly div_exact: inexact division (degree)");
        std::vector<Int> rem = a.c_;
        std::vector<Int> q(a.c_.size() - b.c_.size() + 1);
        const Int& lead = b.c_.back();
        for (std::size_t k = q.size(); k-- > 0;) {
            Int qk = div_exact(rem[k + b.c_.size() - 1], lead);
            q[k] = qk;
            if (qk != 0)
                for (std::size_t i = 0; i < b.c_.size(); ++i)
                    rem[k + i] -= qk * b.c_[i];
        }
        for (const auto& r : rem)
            if (r != 0) throw std::logic_error("Poly div_exact: nonzero remainder");
        return Poly(std::move(q));
    }

    // "1 + 3t + t^2" style; "0" for the zero polynomial.
    std::string pretty(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            Int a = c_[k];
            if (out.empty()) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            const bool unit = (a == 1 && k > 0);
            if (!unit) out += to_string(a);
            if (k >= 1) out += var;
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

inline bool is_zero(const Int& v) { return v == 0; }
inline bool is_zero(const Poly& p) { return p.is_zero(); }

} // namespace shicone
