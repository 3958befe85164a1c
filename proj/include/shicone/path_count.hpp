#pragma once

#include "shicone/digraph.hpp"
#include "shicone/numeric.hpp"
#include "shicone/poly.hpp"

#include <vector>

namespace shicone {

// Closed-form path counts in the staircase digraphs, plus generic dynamic
// programming fallbacks used for the exceptional types and for cross-checks.

// Monotone northeast lattice paths from (x1, y1) to (x2, y2) that stay weakly
// above the main diagonal (the reflection-principle ballot count). Returns 1
// when the endpoints coincide and 0 when the target is unreachable.
Int ballot_count(int x1, int y1, int x2, int y2);

// Paths from (x, y) to the top-left sink of the rank-n B staircase, obtained
// by summing ballot counts into the antidiagonal x + y = 2n. Evaluated both
// as the raw sum and in closed form; a mismatch throws std::logic_error.
Int diag_sum(int x, int y, int n);

// Point-to-point path count inside the rank-n B staircase (also the upper
// component of the D digraph after shifting). Sources on the rim row
// y = 2n - x + 1 are forced into the sink.
Int gamma_B(int x1, int y1, int x2, int y2, int n);

// Point-to-point count in the type D digraph, assembled from ballot counts,
// the component hand-off combinatorics and gamma_B on the upper component.
Int gamma_D(const ShiDigraph& g, int rank, int v1, int v2);

// Corner-graded path polynomial between staircase points of a type A digraph:
// the coefficient of t^l counts paths turning east-then-north exactly l times
// at designated corners (every unit box is designated in type A).
Poly corner_poly_A(int x1, int y1, int x2, int y2);

// Path-count DP over an explicit digraph: counts[v] = #paths source -> v.
std::vector<Int> dp_count_from(const ShiDigraph& g, int source);
Int dp_count(const ShiDigraph& g, int v1, int v2);

// Corner-graded DP: polys[v] = sum over paths source -> v of t^(number of
// designated corner triples traversed), where every corner instance of every
// root is designated.
std::vector<Poly> dp_corner_poly_from(const ShiDigraph& g, int source);
Poly dp_corner_poly(const ShiDigraph& g, int v1, int v2);

} // namespace shicone
