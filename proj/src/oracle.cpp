#include "shicone/oracle.hpp"

#include "shicone/errors.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace shicone {

AntichainCount count_antichains(const RootSystem& sys, const std::vector<char>& excluded) {
    const int m = sys.num_positive();
    if (m > 64) throw std::invalid_argument("antichain oracle supports at most 64 roots");
    if (static_cast<int>(excluded.size()) != m)
        throw std::invalid_argument("excluded mask has wrong length");

    std::vector<std::uint64_t> mask(m, 0);
    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s)
            if (sys.comparable(r, s)) mask[r] |= std::uint64_t{1} << s;

    AntichainCount out;
    out.by_size.assign(m + 1, Int(0));
    out.by_size[0] = 1; // the empty antichain
    auto rec = [&](auto&& self, int start, std::uint64_t blocked, int size) -> void {
        for (int r = start; r < m; ++r) {
            if (excluded[r] || ((blocked >> r) & 1)) continue;
            out.by_size[size + 1] += 1;
            self(self, r + 1, blocked | mask[r], size + 1);
        }
    };
    rec(rec, 0, 0, 0);
    for (const Int& c : out.by_size) out.total += c;
    while (out.by_size.size() > 1 && out.by_size.back() == 0) out.by_size.pop_back();
    return out;
}

namespace {

// True when some forbidden sequence has just been completed at the end of path.
bool completes_forbidden(const std::vector<int>& path, const std::vector<PathSeq>& forbidden) {
    for (const PathSeq& f : forbidden) {
        if (f.empty() || f.size() > path.size()) continue;
        bool match = true;
        std::size_t off = path.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i)
            if (path[off + i] != f[i]) {
                match = false;
                break;
            }
        if (match) return true;
    }
    return false;
}

} // namespace

PathCount count_avoiding_paths(const ShiDigraph& g, const std::vector<PathSeq>& forbidden,
                               long long cap) {
    std::map<std::tuple<int, int, int>, int> triple; // designated corner lookup
    for (const auto& instances : g.corners)
        for (const Corner& c : instances) triple[{c.bl, c.br, c.tr}] = 1;

    PathCount out;
    long long found = 0;
    std::vector<int> path{g.source};
    if (completes_forbidden(path, forbidden)) return out;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == g.sink) {
            if (++found > cap) throw CapExceeded("path oracle exceeded its enumeration cap");
            int k = 0;
            for (std::size_t i = 0; i + 2 < path.size(); ++i)
                if (triple.count({path[i], path[i + 1], path[i + 2]})) ++k;
            out.corner_poly = out.corner_poly + Poly::monomial(k);
            return;
        }
        for (int t : g.adj[v]) {
            path.push_back(t);
            if (!completes_forbidden(path, forbidden)) self(self, t);
            path.pop_back();
        }
    };
    rec(rec, g.source);
    out.total = out.corner_poly.eval(1);
    return out;
}

Int weighted_path_sum(const SimpleDag& dag, int source, int sink,
                      const std::vector<PathSeq>& forbidden,
                      const std::vector<std::vector<Int>>& edge_weight) {
    auto weight = [&](int f, int t) -> Int {
        if (edge_weight.empty()) return 1;
        return edge_weight[f][t];
    };
    Int total = 0;
    std::vector<int> path{source};
    if (completes_forbidden(path, forbidden)) return total;
    auto rec = [&](auto&& self, int v, Int acc) -> void {
        if (v == sink) {
            total += acc;
            return;
        }
        for (int t : dag.adj[v]) {
            path.push_back(t);
            if (!completes_forbidden(path, forbidden)) self(self, t, acc * weight(v, t));
            path.pop_back();
        }
    };
    rec(rec, source, Int(1));
    return total;
}

} // namespace shicone
