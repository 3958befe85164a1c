#include "shicone/path_count.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace shicone {

Int ballot_count(int x1, int y1, int x2, int y2) {
    if (x1 == x2 && y1 == y2) return 1;
    if (x2 < x1 || y2 < y1) return 0;
    long long d = (x2 - x1) + (y2 - y1);
    return binomial(d, y2 - y1) - binomial(d, y2 - x1 + 1);
}

Int diag_sum(int x, int y, int n) {
    Int raw = 0;
    for (int i = 0; i <= n; ++i) raw += ballot_count(x, y, i, 2 * n - i);

    // Closed form: split the telescoped ballot sum into its two boundary runs.
    const int a = x, b = y;
    const long long j = 2LL * n - a - b;
    const int m = std::min(n, 2 * n - b);
    const int c = b - a;
    Int s1 = 0, s2 = 0;
    if (j >= 0) {
        for (int i = std::max(a, m - c); i <= m; ++i) s1 += binomial(j, j + a - i);
        for (int i = a - c - 1; i <= std::min(a, m - c) - 1; ++i) s2 += binomial(j, j + a - i);
    }
    Int closed = s1 - s2;
    if (raw != closed)
        throw std::logic_error("diag_sum: closed form disagrees with the raw ballot sum");
    return raw;
}

Int gamma_B(int x1, int y1, int x2, int y2, int n) {
    if (x1 == x2 && y1 == y2) return 1;
    if (x2 == 1 && y2 == 2 * n) { // the sink
        if (x1 >= 2 && y1 == 2 * n - x1 + 1) return 1; // rim sources are forced in
        return diag_sum(x1, y1, n);
    }
    // All other targets sit strictly below the antidiagonal, where the
    // digraph is a plain northeast staircase.
    return ballot_count(x1, y1, x2, y2);
}

namespace {

// Paths within copy (3, j) from its entry column k to the hand-off at column
// i; valid for j - 1 <= i <= n - 2 and 0 <= k <= j - 1.
Int lambda_d(int i, int j, int k, int n) {
    if (i == j - 1) return Int(j - k) + (i == n - 2 ? 1 : 0);
    if (i == n - 2) return 2;
    return 1;
}

// Paths within copy (2, k+1) from its entry to the hand-off feeding copy
// (3, j): one direct route, plus a rim detour when the hand-off column is
// the last one.
int mu_d(int j, int n) { return j == n - 1 ? 2 : 1; }

} // namespace

Int gamma_D(const ShiDigraph& g, int rank, int v1, int v2) {
    if (v1 == v2) return 1;
    const int n = rank;
    const int m = n - 2;
    const DigraphVertex& a = g.verts[v1];
    const DigraphVertex& b = g.verts[v2];
    // Counting inside component 4, which is stored shifted north by 4: the
    // source is given in unshifted coordinates, the target in stored ones.
    auto gB4 = [&](int x1, int y1, int x2, int y2) {
        return gamma_B(x1, y1, x2, y2 - 4, m);
    };

    if (a.u == 1) {
        // Paths from component 1 leave through one of its sinks (k, n-1).
        auto reach = [&](int k) -> Int {
            if (a.y <= n - 2) return ballot_count(a.x, a.y, k, n - 2);
            return (a.y == n - 1 && k == a.x) ? Int(1) : Int(0);
        };
        switch (b.u) {
        case 1:
            if (b.y <= n - 2) return ballot_count(a.x, a.y, b.x, b.y);
            return reach(b.x);
        case 2:
            if (b.y != 0) return 0;
            return (b.x >= b.v - 1) ? reach(b.v - 1) : Int(0);
        case 3: {
            if (b.y != 0) return 0;
            Int s = 0;
            for (int q = 0; q <= std::min(b.x, b.v - 1); ++q) s += reach(q);
            return mu_d(b.v, n) * s;
        }
        case 4: {
            Int s = 0;
            for (int i = 0; i <= n - 2; ++i) {
                Int into =gB4(i, m, b.x, b.y);
                if (into == 0) continue;
                Int ways = 0;
                for (int j = 1; j <= i + 1; ++j)
                    for (int k = 0; k <= j - 1; ++k)
                        ways += mu_d(j, n) * lambda_d(i, j, k, n) * reach(k);
                s += ways * into;
            }
            return s;
        }
        }
        return 0;
    }
    if (a.u == 2) {
        if (a.y != 1) return 0; // sources in component 2 are corner tops
        const int j = std::min(a.x + 1, n - 1), k = a.v - 1;
        if (b.u == 3) {
            if (b.y != 0) return 0;
            return (b.v == j && b.x >= k) ? 1 : 0;
        }
        if (b.u == 4) {
            Int s = 0;
            for (int q = j - 1; q <= n - 2; ++q)
                s += lambda_d(q, j, k, n) * gB4(q, m, b.x, b.y);
            return s;
        }
        return 0;
    }
    if (a.u == 3) {
        if (a.y != 1 || b.u != 4) return 0;
        const int q = (a.x < a.v) ? a.v - 1 : (a.x <= n - 2 ? a.x : n - 2);
        return gB4(q, m, b.x, b.y);
    }
    if (a.u == 4 && b.u == 4) return gB4(a.x, a.y - 4, b.x, b.y);
    return 0;
}

Poly corner_poly_A(int x1, int y1, int x2, int y2) {
    if (x2 < x1 || y2 < y1) return Poly();
    const int lmax = std::min(x2 - x1, y2 - y1);
    std::vector<Int> coeffs(lmax + 1);
    for (int l = 0; l <= lmax; ++l)
        coeffs[l] = binomial(y2 - y1, l) * binomial(x2 - x1, l) -
                    binomial(y2 - x1 - 1, l - 1) * binomial(x2 - y1 + 1, l + 1);
    return Poly(std::move(coeffs));
}

std::vector<Int> dp_count_from(const ShiDigraph& g, int source) {
    std::vector<Int> cnt(g.num_vertices(), 0);
    cnt[source] = 1;
    for (int v : g.topo_order())
        if (cnt[v] != 0)
            for (int t : g.adj[v]) cnt[t] += cnt[v];
    return cnt;
}

Int dp_count(const ShiDigraph& g, int v1, int v2) { return dp_count_from(g, v1)[v2]; }

std::vector<Poly> dp_corner_poly_from(const ShiDigraph& g, int source) {
    // State lives on edges: weight of all paths from source ending with that
    // edge, graded by completed corner triples.
    std::map<std::pair<int, int>, int> eid;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int t : g.adj[v]) {
            eid[{v, t}] = static_cast<int>(edges.size());
            edges.push_back({v, t});
        }
    std::map<std::tuple<int, int, int>, int> triple;
    for (const auto& instances : g.corners)
        for (const Corner& c : instances) triple[{c.bl, c.br, c.tr}] = 1;

    std::vector<Poly> state(edges.size());
    for (int t : g.adj[source]) state[eid[{source, t}]] = Poly(Int(1));
    const Poly t_mono = Poly::t();
    for (int v : g.topo_order()) {
        for (int in : g.radj[v]) {
            const Poly& p = state[eid[{in, v}]];
            if (p.is_zero()) continue;
            for (int out : g.adj[v]) {
                Poly step = triple.count({in, v, out}) ? p * t_mono : p;
                state[eid[{v, out}]] += step;
            }
        }
    }
    std::vector<Poly> result(g.num_vertices());
    result[source] = Poly(Int(1));
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (v == source) continue;
        Poly acc;
        for (int in : g.radj[v]) acc += state[eid[{in, v}]];
        result[v] = std::move(acc);
    }
    return result;
}

Poly dp_corner_poly(const ShiDigraph& g, int v1, int v2) {
    return dp_corner_poly_from(g, v1)[v2];
}

} // namespace shicone
