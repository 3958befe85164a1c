#include "shicone/digraph.hpp"

#include "shicone/errors.hpp"
#include "shicone/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace shicone {

int ShiDigraph::num_edges() const {
    int e = 0;
    for (const auto& out : adj) e += static_cast<int>(out.size());
    return e;
}

bool ShiDigraph::has_edge(int from, int to) const {
    const auto& out = adj[from];
    return std::binary_search(out.begin(), out.end(), to);
}

int ShiDigraph::vertex_id(int x, int y, int u, int v) const {
    auto it = id_.find({x, y, u, v});
    return it == id_.end() ? -1 : it->second;
}

std::vector<int> ShiDigraph::topo_order() const {
    std::vector<int> indeg(verts.size(), 0), order;
    for (const auto& out : adj)
        for (int t : out) ++indeg[t];
    std::vector<int> stack;
    for (int i = 0; i < num_vertices(); ++i)
        if (indeg[i] == 0) stack.push_back(i);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int t : adj[v])
            if (--indeg[t] == 0) stack.push_back(t);
    }
    if (order.size() != verts.size())
        throw std::logic_error("digraph contains a cycle");
    return order;
}

std::string ShiDigraph::vertex_name(int id) const {
    const DigraphVertex& w = verts[id];
    return std::to_string(w.x) + "," + std::to_string(w.y) + "(" + std::to_string(w.u) +
           "," + std::to_string(w.v) + ")";
}

namespace {

struct VKey {
    int x, y, u, v;
    bool operator<(const VKey& o) const {
        return std::tie(u, v, x, y) < std::tie(o.u, o.v, o.x, o.y);
    }
};

} // namespace

// Accumulates vertices, edges and corners keyed by coordinates, then produces
// a ShiDigraph with ids assigned in sorted (u, v, x, y) order.
class DigraphBuilder {
public:
    void vertex(int x, int y, int u = 1, int v = 0) { keys_.insert({x, y, u, v}); }
    void edge(VKey from, VKey to) {
        keys_.insert(from);
        keys_.insert(to);
        edges_.insert({from, to});
    }
    void corner(std::vector<int> root, VKey bl, VKey br, VKey tr) {
        corners_.push_back({std::move(root), bl, br, tr});
    }
    void endpoints(VKey source, VKey sink) {
        source_ = source;
        sink_ = sink;
    }

    ShiDigraph finish(const RootSystem& sys) {
        ShiDigraph g;
        g.type = sys.label;
        for (const VKey& k : keys_) {
            g.id_[{k.x, k.y, k.u, k.v}] = g.num_vertices();
            g.verts.push_back({k.x, k.y, k.u, k.v});
        }
        auto id = [&](const VKey& k) {
            int r = g.vertex_id(k.x, k.y, k.u, k.v);
            if (r < 0) throw std::logic_error("digraph builder referenced a missing vertex");
            return r;
        };
        g.adj.assign(g.verts.size(), {});
        g.radj.assign(g.verts.size(), {});
        for (const auto& [f, t] : edges_) {
            g.adj[id(f)].push_back(id(t));
            g.radj[id(t)].push_back(id(f));
        }
        for (auto& out : g.adj) std::sort(out.begin(), out.end());
        for (auto& in : g.radj) std::sort(in.begin(), in.end());
        g.corners.assign(sys.num_positive(), {});
        for (const auto& [root, bl, br, tr] : corners_) {
            int r = sys.index_of(root);
            if (r < 0) throw std::logic_error("digraph corner labelled by a non-root");
            g.corners[r].push_back({id(bl), id(br), id(tr)});
        }
        g.source = id(source_);
        g.sink = id(sink_);
        return g;
    }

private:
    std::set<VKey> keys_;
    std::set<std::pair<VKey, VKey>> edges_;
    struct CornerSpec {
        std::vector<int> root;
        VKey bl, br, tr;
    };
    std::vector<CornerSpec> corners_;
    VKey source_{}, sink_{};
};

namespace {

std::vector<int> interval_root(int n, int i, int j) { // 1s on i..j (1-based)
    std::vector<int> c(n, 0);
    for (int t = i; t <= j; ++t) c[t - 1] = 1;
    return c;
}

} // namespace

ShiDigraph build_digraph_A(int n) {
    if (n < 1) throw std::invalid_argument("type A digraph needs rank >= 1");
    RootSystem sys = build_root_system("A" + std::to_string(n));
    DigraphBuilder b;
    auto present = [&](int x, int y) {
        return 0 <= x && x <= n && y >= 1 && y >= x && y <= n + 1;
    };
    for (int x = 0; x <= n; ++x)
        for (int y = std::max(x, 1); y <= n + 1; ++y) {
            b.vertex(x, y);
            if (present(x, y + 1)) b.edge({x, y, 1, 0}, {x, y + 1, 1, 0});
            if (present(x + 1, y)) b.edge({x, y, 1, 0}, {x + 1, y, 1, 0});
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            b.corner(interval_root(n, i, j), {i - 1, j, 1, 0}, {i, j, 1, 0},
                     {i, j + 1, 1, 0});
    b.endpoints({0, 1, 1, 0}, {n, n + 1, 1, 0});
    return b.finish(sys);
}

namespace {

// Box labels for the B-shaped diagram. Family B keys the skew row k box i by
// alpha_{i..n} + alpha_{k..n}; family C reuses the same shape with its own
// roots (same poset up to isomorphism).
std::vector<int> b_skew_root(int n, int k, int i) {
    std::vector<int> c(n, 0);
    for (int t = i; t < k; ++t) c[t - 1] = 1;
    for (int t = k; t <= n; ++t) c[t - 1] = 2;
    return c;
}

std::vector<int> c_skew_root(int n, int k, int i) {
    std::vector<int> c(n, 0);
    if (i < k - 1) {
        for (int t = i; t <= k - 2; ++t) c[t - 1] = 1;
        for (int t = k - 1; t <= n - 1; ++t) c[t - 1] = 2;
    } else { // i == k-1
        for (int t = i; t <= n - 1; ++t) c[t - 1] = 2;
    }
    c[n - 1] = 1;
    return c;
}

} // namespace

ShiDigraph build_digraph_B(int n, char family) {
    if (n < 2) throw std::invalid_argument("type B/C digraph needs rank >= 2");
    if (family != 'B' && family != 'C')
        throw std::invalid_argument("build_digraph_B: family must be 'B' or 'C'");
    RootSystem sys = build_root_system(std::string(1, family) + std::to_string(n));
    DigraphBuilder b;
    auto present = [&](int x, int y) {
        if (x == 0) return 1 <= y && y <= 2 * n;
        return 1 <= x && x <= n && x <= y && y <= 2 * n - x + 1;
    };
    for (int x = 0; x <= n; ++x)
        for (int y = 1; y <= 2 * n; ++y) {
            if (!present(x, y)) continue;
            if (present(x, y + 1)) b.edge({x, y, 1, 0}, {x, y + 1, 1, 0});
            // east into (x+1, y) only below the staircase rim
            if (present(x + 1, y) && y <= 2 * n - (x + 1))
                b.edge({x, y, 1, 0}, {x + 1, y, 1, 0});
        }
    b.edge({0, 2 * n, 1, 0}, {1, 2 * n, 1, 0}); // final approach into the sink
    for (int x = 2; x <= n; ++x)                // westbound rim edges
        b.edge({x, 2 * n - x + 1, 1, 0}, {x - 1, 2 * n - x + 1, 1, 0});

    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= j; ++i)
            b.corner(interval_root(n, i, j), {i - 1, j, 1, 0}, {i, j, 1, 0},
                     {i, j + 1, 1, 0});
    for (int k = n; k >= 2; --k) {
        int row = 2 * n - k + 1;
        for (int i = 1; i <= k - 1; ++i) {
            auto root = (family == 'B') ? b_skew_root(n, k, i) : c_skew_root(n, k, i);
            b.corner(std::move(root), {i - 1, row, 1, 0}, {i, row, 1, 0},
                     {i, row + 1, 1, 0});
        }
    }
    b.endpoints({0, 1, 1, 0}, {1, 2 * n, 1, 0});
    return b.finish(sys);
}

namespace {

// Root coefficient vectors for the four-component D_n digraph.
std::vector<int> d_gamma2_root(int n, int j) { // alpha_{j..n-1}
    return interval_root(n, j, n - 1);
}
std::vector<int> d_gamma3_root(int n, int b) {
    std::vector<int> c(n, 0);
    if (b <= n - 2)
        for (int t = b; t <= n - 2; ++t) c[t - 1] = 1;
    c[n - 1] = 1; // alpha_n; b == n-1 gives alpha_n itself
    return c;
}
std::vector<int> d_gamma4_bottom_root(int n, int i) { // alpha_{i..n} through the fork
    return interval_root(n, i, n);
}
std::vector<int> d_gamma4_skew_root(int n, int k, int i) {
    std::vector<int> c(n, 0);
    for (int t = i; t <= k - 1; ++t) c[t - 1] = 1;
    for (int t = k; t <= n - 2; ++t) c[t - 1] = 2;
    c[n - 2] = 1; // position n-1
    c[n - 1] = 1; // position n
    return c;
}

} // namespace

ShiDigraph build_digraph_D(int n) {
    if (n < 4) throw std::invalid_argument("type D digraph needs rank >= 4");
    RootSystem sys = build_root_system("D" + std::to_string(n));
    DigraphBuilder b;

    // Component 1: the A_{n-2} staircase with its top-row east edges removed.
    auto p1 = [&](int x, int y) {
        return 0 <= x && x <= n - 2 && y >= 1 && y >= x && y <= n - 1;
    };
    for (int x = 0; x <= n - 2; ++x)
        for (int y = std::max(x, 1); y <= n - 1; ++y) {
            b.vertex(x, y, 1, 0);
            if (p1(x, y + 1)) b.edge({x, y, 1, 0}, {x, y + 1, 1, 0});
            if (p1(x + 1, y) && y <= n - 2) b.edge({x, y, 1, 0}, {x + 1, y, 1, 0});
        }
    for (int i = 1; i <= n - 2; ++i)
        for (int j = i; j <= n - 2; ++j)
            b.corner(interval_root(n, i, j), {i - 1, j, 1, 0}, {i, j, 1, 0},
                     {i, j + 1, 1, 0});

    // Components (2, i), i = 1..n-1: a row of boxes, entered at its i-th column.
    for (int i = 1; i <= n - 1; ++i) {
        for (int x = i - 1; x <= n - 1; ++x) {
            b.edge({x, 0, 2, i}, {x, 1, 2, i});
            if (x + 1 <= n - 1) b.edge({x, 0, 2, i}, {x + 1, 0, 2, i});
        }
        b.edge({n - 1, 1, 2, i}, {n - 2, 1, 2, i});
        for (int j = i; j <= n - 1; ++j)
            b.corner(d_gamma2_root(n, j), {j - 1, 0, 2, i}, {j, 0, 2, i}, {j, 1, 2, i});
        b.edge({i - 1, n - 1, 1, 0}, {i - 1, 0, 2, i}); // hand-off from component 1
    }

    // Components (3, i), i = 1..n-1: full row of boxes; the top row runs east
    // up to column i-1 and always receives the final westbound edge.
    for (int i = 1; i <= n - 1; ++i) {
        for (int x = 0; x <= n - 1; ++x) {
            b.edge({x, 0, 3, i}, {x, 1, 3, i});
            if (x + 1 <= n - 1) b.edge({x, 0, 3, i}, {x + 1, 0, 3, i});
        }
        for (int x = 0; x <= i - 2; ++x) b.edge({x, 1, 3, i}, {x + 1, 1, 3, i});
        b.edge({n - 1, 1, 3, i}, {n - 2, 1, 3, i});
        for (int bb = 1; bb <= n - 1; ++bb)
            b.corner(d_gamma3_root(n, bb), {bb - 1, 0, 3, i}, {bb, 0, 3, i}, {bb, 1, 3, i});
    }
    // Hand-offs (2, i) -> (3, j): the sink at column x of copy (2, i) feeds
    // copy (3, x+1) at column i-1.
    for (int i = 1; i <= n - 1; ++i)
        for (int x = i - 1; x <= n - 2; ++x)
            b.edge({x, 1, 2, i}, {i - 1, 0, 3, x + 1});

    // Component 4: the upper half of the B_{n-2} staircase, shifted so the
    // global sink sits at (1, 2n).
    auto p4 = [&](int x, int y) {
        if (x == 0) return n + 2 <= y && y <= 2 * n;
        return 1 <= x && x <= n - 2 && n + 2 <= y && y <= 2 * n - x + 1;
    };
    for (int x = 0; x <= n - 2; ++x)
        for (int y = n + 2; y <= 2 * n; ++y) {
            if (!p4(x, y)) continue;
            b.vertex(x, y, 4, 0);
            if (p4(x, y + 1)) b.edge({x, y, 4, 0}, {x, y + 1, 4, 0});
            if (p4(x + 1, y) && y <= 2 * n - (x + 1))
                b.edge({x, y, 4, 0}, {x + 1, y, 4, 0});
        }
    b.edge({0, 2 * n, 4, 0}, {1, 2 * n, 4, 0});
    for (int x = 2; x <= n - 2; ++x)
        b.edge({x, 2 * n - x + 1, 4, 0}, {x - 1, 2 * n - x + 1, 4, 0});
    for (int i = 1; i <= n - 2; ++i)
        b.corner(d_gamma4_bottom_root(n, i), {i - 1, n + 2, 4, 0}, {i, n + 2, 4, 0},
                 {i, n + 3, 4, 0});
    for (int k = n - 2; k >= 2; --k) {
        int row = 2 * n - k + 1;
        for (int i = 1; i <= k - 1; ++i)
            b.corner(d_gamma4_skew_root(n, k, i), {i - 1, row, 4, 0}, {i, row, 4, 0},
                     {i, row + 1, 4, 0});
    }
    // Hand-offs (3, i) -> component 4: sink at column x enters above column x.
    for (int i = 1; i <= n - 1; ++i)
        for (int x = i - 1; x <= n - 2; ++x)
            b.edge({x, 1, 3, i}, {x, n + 2, 4, 0});

    b.endpoints({0, 1, 1, 0}, {1, 2 * n, 4, 0});
    return b.finish(sys);
}

ShiDigraph build_digraph_G2() {
    RootSystem sys = build_root_system("G2");
    DigraphBuilder b;
    for (int y = 1; y <= 5; ++y) b.edge({0, y, 1, 0}, {0, y + 1, 1, 0});
    for (int y = 1; y <= 5; ++y) b.edge({1, y, 1, 0}, {1, y + 1, 1, 0});
    b.edge({2, 2, 1, 0}, {2, 3, 1, 0});
    for (int y = 1; y <= 6; ++y) b.edge({0, y, 1, 0}, {1, y, 1, 0});
    b.edge({1, 2, 1, 0}, {2, 2, 1, 0});
    b.edge({2, 3, 1, 0}, {1, 3, 1, 0});
    auto corner = [&](std::vector<int> root, int x, int y) {
        b.corner(std::move(root), {x, y, 1, 0}, {x + 1, y, 1, 0}, {x + 1, y + 1, 1, 0});
    };
    corner({1, 0}, 0, 1);
    corner({1, 1}, 0, 2);
    corner({0, 1}, 1, 2);
    corner({2, 1}, 0, 3);
    corner({3, 1}, 0, 4);
    corner({3, 2}, 0, 5);
    b.endpoints({0, 1, 1, 0}, {1, 6, 1, 0});
    return b.finish(sys);
}

ShiDigraph build_digraph_F4() {
    RootSystem sys = build_root_system("F4");
    DigraphBuilder b;

    // Component 1: A3-style staircase, top-row east edges removed.
    auto p1 = [&](int x, int y) { return 0 <= x && x <= 3 && y >= 1 && y >= x && y <= 4; };
    for (int x = 0; x <= 3; ++x)
        for (int y = std::max(x, 1); y <= 4; ++y) {
            if (p1(x, y + 1)) b.edge({x, y, 1, 0}, {x, y + 1, 1, 0});
            if (p1(x + 1, y) && y <= 3) b.edge({x, y, 1, 0}, {x + 1, y, 1, 0});
        }
    auto c1 = [&](std::vector<int> root, int i, int j) {
        b.corner(std::move(root), {i - 1, j, 1, 0}, {i, j, 1, 0}, {i, j + 1, 1, 0});
    };
    c1({1, 0, 0, 0}, 1, 1);
    c1({1, 1, 0, 0}, 1, 2);
    c1({1, 1, 1, 0}, 1, 3);
    c1({0, 1, 0, 0}, 2, 2);
    c1({0, 1, 1, 0}, 2, 3);
    c1({0, 0, 1, 0}, 3, 3);

    // Components (2, c): rows of four boxes with shrinking support.
    const int p2_xmin[4] = {0, 0, 1, 2}; // 1-based copies
    for (int c = 1; c <= 3; ++c) {
        int xmin = p2_xmin[c];
        for (int x = xmin; x <= 4; ++x) {
            b.edge({x, 0, 2, c}, {x, 1, 2, c});
            if (x + 1 <= 4) b.edge({x, 0, 2, c}, {x + 1, 0, 2, c});
        }
        b.edge({4, 1, 2, c}, {3, 1, 2, c});
        b.edge({3, 1, 2, c}, {2, 1, 2, c});
        const std::vector<std::vector<int>> row_roots = {
            {1, 1, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
        for (int bb = c; bb <= 4; ++bb)
            b.corner(row_roots[bb - 1], {bb - 1, 0, 2, c}, {bb, 0, 2, c}, {bb, 1, 2, c});
    }
    b.edge({0, 4, 1, 0}, {0, 0, 2, 1});
    b.edge({1, 4, 1, 0}, {1, 0, 2, 2});
    b.edge({2, 4, 1, 0}, {2, 0, 2, 3});
    b.edge({3, 4, 1, 0}, {3, 0, 2, 3});

    // Components (3, c): rows of three boxes; the top row grows eastward with c.
    for (int c = 1; c <= 3; ++c) {
        for (int x = 0; x <= 3; ++x) {
            b.edge({x, 0, 3, c}, {x, 1, 3, c});
            if (x + 1 <= 3) b.edge({x, 0, 3, c}, {x + 1, 0, 3, c});
        }
        int top_east = (c == 1) ? 0 : (c == 2 ? 2 : 3);
        for (int x = 0; x < top_east; ++x) b.edge({x, 1, 3, c}, {x + 1, 1, 3, c});
        const std::vector<std::vector<int>> row_roots = {
            {2, 2, 1, 0}, {1, 2, 1, 0}, {0, 2, 1, 0}};
        for (int bb = 1; bb <= 3; ++bb)
            b.corner(row_roots[bb - 1], {bb - 1, 0, 3, c}, {bb, 0, 3, c}, {bb, 1, 3, c});
    }
    b.edge({0, 1, 2, 1}, {0, 0, 3, 1});
    b.edge({1, 1, 2, 1}, {0, 0, 3, 2});
    b.edge({2, 1, 2, 1}, {0, 0, 3, 3});
    b.edge({1, 1, 2, 2}, {2, 0, 3, 2});
    b.edge({2, 1, 2, 2}, {2, 0, 3, 3});
    b.edge({2, 1, 2, 3}, {3, 0, 3, 3});

    // Component 4: three nested columns of boxes ending at the sink.
    const int p4_ymax[4] = {6, 6, 3, 2}; // by x
    for (int x = 0; x <= 3; ++x)
        for (int y = 0; y < p4_ymax[x]; ++y) b.edge({x, y, 4, 0}, {x, y + 1, 4, 0});
    for (int y = 0; y <= 6; ++y) b.edge({0, y, 4, 0}, {1, y, 4, 0});
    for (int y = 0; y <= 2; ++y) b.edge({1, y, 4, 0}, {2, y, 4, 0});
    for (int y = 0; y <= 1; ++y) b.edge({2, y, 4, 0}, {3, y, 4, 0});
    b.edge({2, 3, 4, 0}, {1, 3, 4, 0});
    b.edge({3, 2, 4, 0}, {2, 2, 4, 0});
    const std::vector<std::vector<int>> col0 = {{2, 2, 1, 1}, {2, 2, 2, 1}, {2, 3, 2, 1},
                                               {2, 4, 2, 1}, {2, 4, 3, 1}, {2, 4, 3, 2}};
    const std::vector<std::vector<int>> col1 = {{1, 2, 1, 1}, {1, 2, 2, 1}, {1, 3, 2, 1}};
    const std::vector<std::vector<int>> col2 = {{0, 2, 1, 1}, {0, 2, 2, 1}};
    for (int y = 0; y < 6; ++y)
        b.corner(col0[y], {0, y, 4, 0}, {1, y, 4, 0}, {1, y + 1, 4, 0});
    for (int y = 0; y < 3; ++y)
        b.corner(col1[y], {1, y, 4, 0}, {2, y, 4, 0}, {2, y + 1, 4, 0});
    for (int y = 0; y < 2; ++y)
        b.corner(col2[y], {2, y, 4, 0}, {3, y, 4, 0}, {3, y + 1, 4, 0});
    b.edge({0, 1, 3, 1}, {0, 0, 4, 0});
    b.edge({1, 1, 3, 1}, {1, 0, 4, 0});
    b.edge({2, 1, 3, 1}, {2, 0, 4, 0});
    b.edge({3, 1, 3, 1}, {3, 0, 4, 0});
    b.edge({2, 1, 3, 2}, {2, 0, 4, 0});
    b.edge({3, 1, 3, 2}, {3, 0, 4, 0});
    b.edge({3, 1, 3, 3}, {3, 0, 4, 0});

    b.endpoints({0, 1, 1, 0}, {1, 6, 4, 0});
    return b.finish(sys);
}

ShiDigraph build_shi_digraph(const RootSystem& sys) {
    switch (sys.family) {
    case 'A': return build_digraph_A(sys.rank);
    case 'B': return build_digraph_B(sys.rank, 'B');
    case 'C': return build_digraph_B(sys.rank, 'C');
    case 'D':
        if (sys.rank < 4)
            throw std::invalid_argument("no digraph construction for D3; use A3");
        return build_digraph_D(sys.rank);
    case 'G': return build_digraph_G2();
    case 'F': return build_digraph_F4();
    default:
        throw MissingData("digraph data unavailable for " + sys.label +
                          "; supply an external digraph file (see --data)");
    }
}

ValidationReport validate_digraph(const RootSystem& sys, const ShiDigraph& g) {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.problems.push_back(msg);
    };

    try {
        g.topo_order();
    } catch (const std::logic_error&) {
        fail("digraph contains a cycle");
        return rep;
    }

    int sources = 0, sinks = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.radj[v].empty()) {
            ++sources;
            if (v != g.source) fail("vertex " + g.vertex_name(v) + " is an extra source");
        }
        if (g.adj[v].empty()) {
            ++sinks;
            if (v != g.sink) fail("vertex " + g.vertex_name(v) + " is an extra sink");
        }
    }
    if (sources != 1) fail("expected exactly one source, found " + std::to_string(sources));
    if (sinks != 1) fail("expected exactly one sink, found " + std::to_string(sinks));

    // Corner sanity: every root covered, corner edges present, and no two
    // corner instances sharing an edge (which makes them non-overlapping).
    std::set<std::pair<int, int>> used_edges;
    for (int r = 0; r < sys.num_positive(); ++r) {
        if (g.corners[r].empty())
            fail("root " + sys.root_label(r) + " has no corner instance");
        for (const Corner& c : g.corners[r]) {
            if (!g.has_edge(c.bl, c.br) || !g.has_edge(c.br, c.tr)) {
                fail("corner of " + sys.root_label(r) + " uses missing edges");
                continue;
            }
            if (!used_edges.insert({c.bl, c.br}).second ||
                !used_edges.insert({c.br, c.tr}).second)
                fail("corner of " + sys.root_label(r) + " shares an edge with another corner");
        }
    }
    if (!rep.ok) return rep;

    if (sys.num_positive() > 40) return rep; // bijection check only for small systems

    // Path <-> antichain bijection. Each source-sink path maps to the set of
    // roots whose corner it traverses; the map must be injective onto the full
    // antichain collection.
    std::map<std::tuple<int, int, int>, int> corner_root;
    for (int r = 0; r < sys.num_positive(); ++r)
        for (const Corner& c : g.corners[r]) corner_root[{c.bl, c.br, c.tr}] = r;

    std::set<std::vector<int>> seen_antichains;
    Int paths = 0;
    bool bad = false;
    std::vector<int> path{g.source};
    auto dfs = [&](auto&& self, int v) -> void {
        if (bad) return;
        if (v == g.sink) {
            ++paths;
            std::vector<int> roots;
            for (std::size_t i = 0; i + 2 < path.size(); ++i) {
                auto it = corner_root.find({path[i], path[i + 1], path[i + 2]});
                if (it != corner_root.end()) roots.push_back(it->second);
            }
            std::sort(roots.begin(), roots.end());
            if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) {
                fail("a path traverses two corners of the same root");
                bad = true;
                return;
            }
            for (std::size_t a = 0; a + 1 < roots.size() && !bad; ++a)
                for (std::size_t bb = a + 1; bb < roots.size(); ++bb)
                    if (sys.comparable(roots[a], roots[bb])) {
                        fail("a path selects comparable roots " + sys.root_label(roots[a]) +
                             ", " + sys.root_label(roots[bb]));
                        bad = true;
                        break;
                    }
            if (!seen_antichains.insert(roots).second) {
                fail("two paths map to the same antichain");
                bad = true;
            }
            return;
        }
        for (int t : g.adj[v]) {
            path.push_back(t);
            self(self, t);
            path.pop_back();
            if (bad) return;
        }
    };
    dfs(dfs, g.source);
    if (bad) return rep;

    AntichainCount all = count_antichains(sys, std::vector<char>(sys.num_positive(), 0));
    if (paths != all.total)
        fail("path count " + to_string(paths) + " differs from antichain count " +
             to_string(all.total));
    return rep;
}

std::string export_digraph_dot(const RootSystem& sys, const ShiDigraph& g) {
    (void)sys;
    std::ostringstream os;
    os << "digraph \"" << g.type << "\" {\n";
    for (int v = 0; v < g.num_vertices(); ++v)
        os << "  v" << v << " [label=\"" << g.vertex_name(v) << "\"];\n";
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int t : g.adj[v]) os << "  v" << v << " -> v" << t << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_digraph_json(const RootSystem& sys, const ShiDigraph& g) {
    nlohmann::ordered_json j;
    j["type"] = g.type;
    j["vertices"] = nlohmann::ordered_json::array();
    for (int v = 0; v < g.num_vertices(); ++v) {
        const DigraphVertex& w = g.verts[v];
        j["vertices"].push_back({{"id", v}, {"x", w.x}, {"y", w.y}, {"u", w.u}, {"v", w.v}});
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int t : g.adj[v]) j["edges"].push_back({v, t});
    j["source"] = g.source;
    j["sink"] = g.sink;
    j["corners"] = nlohmann::ordered_json::object();
    for (int r = 0; r < sys.num_positive(); ++r) {
        if (g.corners[r].empty()) continue;
        std::string key;
        for (int i = 0; i < sys.rank; ++i) {
            if (i) key += " ";
            key += std::to_string(sys.roots[r][i]);
        }
        auto arr = nlohmann::ordered_json::array();
        for (const Corner& c : g.corners[r]) arr.push_back({c.bl, c.br, c.tr});
        j["corners"][key] = arr;
    }
    return j.dump(2) + "\n";
}

ShiDigraph load_digraph_json(const RootSystem& sys, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("digraph data is not valid JSON: ") + e.what());
    }
    auto bad = [](const std::string& msg) {
        return std::invalid_argument("digraph data: " + msg);
    };
    try {
        ShiDigraph g;
        g.type = j.at("type").get<std::string>();
        if (g.type != sys.label)
            throw bad("type '" + g.type + "' does not match requested " + sys.label);
        const auto& vs = j.at("vertices");
        g.verts.resize(vs.size());
        std::vector<char> seen(vs.size(), 0);
        for (const auto& vj : vs) {
            int id = vj.at("id").get<int>();
            if (id < 0 || id >= static_cast<int>(vs.size()) || seen[id])
                throw bad("vertex ids must be 0..V-1 and unique");
            seen[id] = 1;
            DigraphVertex w{vj.at("x").get<int>(), vj.at("y").get<int>(),
                            vj.at("u").get<int>(), vj.at("v").get<int>()};
            g.verts[id] = w;
            if (!g.id_.emplace(std::make_tuple(w.x, w.y, w.u, w.v), id).second)
                throw bad("duplicate vertex coordinates");
        }
        g.adj.assign(g.verts.size(), {});
        g.radj.assign(g.verts.size(), {});
        for (const auto& ej : j.at("edges")) {
            int f = ej.at(0).get<int>(), t = ej.at(1).get<int>();
            if (f < 0 || t < 0 || f >= g.num_vertices() || t >= g.num_vertices())
                throw bad("edge endpoint out of range");
            g.adj[f].push_back(t);
            g.radj[t].push_back(f);
        }
        for (auto& out : g.adj) std::sort(out.begin(), out.end());
        for (auto& in : g.radj) std::sort(in.begin(), in.end());
        g.source = j.at("source").get<int>();
        g.sink = j.at("sink").get<int>();
        if (g.source < 0 || g.source >= g.num_vertices() || g.sink < 0 ||
            g.sink >= g.num_vertices())
            throw bad("source/sink out of range");
        g.corners.assign(sys.num_positive(), {});
        for (const auto& [key, arr] : j.at("corners").items()) {
            std::istringstream is(key);
            std::vector<int> coeffs;
            int c;
            while (is >> c) coeffs.push_back(c);
            int r = (static_cast<int>(coeffs.size()) == sys.rank) ? sys.index_of(coeffs) : -1;
            if (r < 0) throw bad("corner key '" + key + "' is not a positive root of " + sys.label);
            for (const auto& tri : arr) {
                Corner cc{tri.at(0).get<int>(), tri.at(1).get<int>(), tri.at(2).get<int>()};
                if (cc.bl < 0 || cc.br < 0 || cc.tr < 0 || cc.bl >= g.num_vertices() ||
                    cc.br >= g.num_vertices() || cc.tr >= g.num_vertices())
                    throw bad("corner vertex out of range");
                g.corners[r].push_back(cc);
            }
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw bad(std::string("missing or mistyped field: ") + e.what());
    }
}

SimpleDag SimpleDag::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleDag d;
    d.n = n;
    d.adj.assign(n, {});
    d.radj.assign(n, {});
    for (auto [f, t] : edges) {
        d.adj[f].push_back(t);
        d.radj[t].push_back(f);
    }
    for (auto& out : d.adj) std::sort(out.begin(), out.end());
    for (auto& in : d.radj) std::sort(in.begin(), in.end());
    return d;
}

std::vector<int> SimpleDag::topo_order() const {
    std::vector<int> indeg(n, 0), order, stack;
    for (const auto& out : adj)
        for (int t : out) ++indeg[t];
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) stack.push_back(i);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int t : adj[v])
            if (--indeg[t] == 0) stack.push_back(t);
    }
    if (static_cast<int>(order.size()) != n) throw std::logic_error("DAG contains a cycle");
    return order;
}

} // namespace shicone
