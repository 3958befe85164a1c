#pragma once

#include "shicone/digraph.hpp"
#include "shicone/errors.hpp"
#include "shicone/numeric.hpp"
#include "shicone/path_count.hpp"
#include "shicone/poly.hpp"
#include "shicone/root_system.hpp"
#include "shicone/weyl.hpp"

#include <map>
#include <string>
#include <vector>

namespace shicone {

namespace detail {

template <typename R>
R cofactor_determinant(const std::vector<std::vector<R>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return R(Int(1));
    if (n == 1) return m[0][0];
    R acc = R(Int(0));
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c, sign = -sign) {
        if (is_zero(m[0][c])) continue;
        std::vector<std::vector<R>> minor(n - 1, std::vector<R>(n - 1, R(Int(0))));
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j) {
                if (j == c) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        R term = m[0][c] * cofactor_determinant(minor);
        if (sign > 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

} // namespace detail

// Fraction-free (Bareiss) determinant over an exact ring: Int or Poly. Every
// internal division is exact; an inexact one throws std::logic_error. In
// debug builds, matrices up to 4x4 are cross-checked against cofactor
// expansion.
template <typename R>
R determinant(std::vector<std::vector<R>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::logic_error("determinant: matrix is not square");
#ifndef NDEBUG
    const std::vector<std::vector<R>> saved = (n <= 4) ? m : std::vector<std::vector<R>>{};
#endif
    R result = R(Int(1));
    if (n == 0) {
        // empty matrix: determinant 1
    } else {
        int sign = 1;
        R prev = R(Int(1));
        bool zero = false;
        for (std::size_t k = 0; k < n && !zero; ++k) {
            std::size_t p = k;
            while (p < n && is_zero(m[p][k])) ++p;
            if (p == n) {
                zero = true;
                break;
            }
            if (p != k) {
                std::swap(m[p], m[k]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j)
                    m[i][j] = div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
                m[i][k] = R(Int(0));
            }
            prev = m[k][k];
        }
        result = zero ? R(Int(0))
                      : (sign > 0 ? m[n - 1][n - 1] : R(Int(0)) - m[n - 1][n - 1]);
    }
#ifndef NDEBUG
    if (n > 0 && n <= 4 && !(result == detail::cofactor_determinant(saved)))
        throw std::logic_error("determinant: Bareiss and cofactor expansion disagree");
#endif
    return result;
}

// One forbidden corner path: positive root index plus the corner instance
// realizing it (a 3-vertex path bl -> br -> tr).
struct PiEntry {
    int root = -1;
    Corner corner;
};

// Pairwise overlap test for explicit paths: two paths overlap when one is a
// contiguous subpath of the other, or a trailing edge run of one equals a
// leading edge run of the other. The matrix construction below is only valid
// for pairwise non-overlapping families.
struct OverlapWitness {
    int i = -1, j = -1;
    std::string reason;
};
bool check_nonoverlapping(const std::vector<PathSeq>& paths, OverlapWitness* witness = nullptr);

// Determinant count of source-to-sink paths in an arbitrary DAG avoiding all
// forbidden paths as contiguous subpaths, with optional multiplicative edge
// weights (empty matrix = all weights 1). Throws std::invalid_argument naming
// an overlapping pair unless allow_overlapping is set (in which case the
// returned value is the possibly-wrong raw determinant, useful for
// demonstrating why the hypothesis matters).
Int forbidden_count(const SimpleDag& dag, int source, int sink,
                    const std::vector<PathSeq>& forbidden,
                    const std::vector<std::vector<Int>>& edge_weight = {},
                    bool allow_overlapping = false);

// Region counting for one Weyl cone: owns the root system and its digraph,
// designates the forbidden corner paths of a cone, assembles the count and
// Poincare matrices, and evaluates their determinants. Copyable so parallel
// sweeps can give each worker an independent cache.
class ConeCounter {
public:
    explicit ConeCounter(const std::string& label);
    ConeCounter(RootSystem sys, ShiDigraph g);

    const RootSystem& system() const { return sys_; }
    const ShiDigraph& digraph() const { return g_; }

    // All corner instances of the roots in N(w^{-1}), roots in canonical
    // order (height ascending, coefficient-lex descending), instances in
    // stored corner order.
    std::vector<PiEntry> forbidden_for(const WeylElement& w) const;
    std::vector<PiEntry> forbidden_for_roots(const std::vector<int>& roots) const;

    std::vector<std::vector<Int>> count_matrix(const std::vector<PiEntry>& pi) const;
    std::vector<std::vector<Poly>> poincare_matrix(const std::vector<PiEntry>& pi) const;

    Int count(const WeylElement& w) const;
    Poly poincare(const WeylElement& w) const;

    // Point-to-point path count, closed form where one exists (families A,
    // B, C, D), cached dynamic programming otherwise.
    Int gamma(int v1, int v2) const;
    // Corner-graded analogue (closed form for family A only).
    Poly gamma_poly(int v1, int v2) const;

    // Roots of N(w^{-1}) in the canonical matrix order.
    std::vector<int> canonical_roots(const WeylElement& w) const;

private:
    RootSystem sys_;
    ShiDigraph g_;
    mutable std::map<int, std::vector<Int>> count_cache_;
    mutable std::map<int, std::vector<Poly>> poly_cache_;
};

// Full sweep over the Weyl group: one row per element.
struct ConeTableRow {
    std::vector<int> word; // a reduced word (empty for the identity)
    int length = 0;
    Int count = 0;
    Poly poincare; // zero polynomial when not requested
};
struct ConeTable {
    std::vector<ConeTableRow> rows;
    Int total = 0;
};
ConeTable all_cones_table(const ConeCounter& base, bool with_poincare, int workers,
                          long long max_group_order);

} // namespace shicone
