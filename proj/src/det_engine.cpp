#include "shicone/det_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace shicone {

namespace {

bool contiguous_in(const PathSeq& small, const PathSeq& big) {
    if (small.empty() || small.size() > big.size()) return false;
    for (std::size_t off = 0; off + small.size() <= big.size(); ++off) {
        bool hit = true;
        for (std::size_t i = 0; i < small.size(); ++i)
            if (big[off + i] != small[i]) {
                hit = false;
                break;
            }
        if (hit) return true;
    }
    return false;
}

// Some trailing run of >= 1 edges of p equals a leading run of q.
bool tail_meets_head(const PathSeq& p, const PathSeq& q) {
    if (p.size() < 2 || q.size() < 2) return false;
    const std::size_t emax = std::min(p.size(), q.size()) - 1;
    for (std::size_t k = 1; k <= emax; ++k) {
        const std::size_t off = p.size() - (k + 1);
        bool hit = true;
        for (std::size_t i = 0; i <= k; ++i)
            if (p[off + i] != q[i]) {
                hit = false;
                break;
            }
        if (hit) return true;
    }
    return false;
}

std::string path_text(const PathSeq& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += "-";
        s += std::to_string(p[i]);
    }
    return s;
}

} // namespace

bool check_nonoverlapping(const std::vector<PathSeq>& paths, OverlapWitness* witness) {
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            std::string reason;
            if (contiguous_in(paths[i], paths[j]) || contiguous_in(paths[j], paths[i]))
                reason = "one is a contiguous subpath of the other";
            else if (tail_meets_head(paths[i], paths[j]) || tail_meets_head(paths[j], paths[i]))
                reason = "a trailing edge run of one is a leading edge run of the other";
            if (!reason.empty()) {
                if (witness) {
                    witness->i = static_cast<int>(i);
                    witness->j = static_cast<int>(j);
                    witness->reason = "paths " + path_text(paths[i]) + " and " +
                                      path_text(paths[j]) + " overlap: " + reason;
                }
                return false;
            }
        }
    return true;
}

namespace {

std::vector<Int> weighted_counts_from(const SimpleDag& dag, int src,
                                      const std::vector<std::vector<Int>>& w) {
    std::vector<Int> cnt(dag.n, 0);
    cnt[src] = 1;
    for (int v : dag.topo_order())
        if (cnt[v] != 0)
            for (int t : dag.adj[v]) cnt[t] += w.empty() ? cnt[v] : cnt[v] * w[v][t];
    return cnt;
}

} // namespace

Int forbidden_count(const SimpleDag& dag, int source, int sink,
                    const std::vector<PathSeq>& forbidden,
                    const std::vector<std::vector<Int>>& edge_weight,
                    bool allow_overlapping) {
    for (const PathSeq& f : forbidden) {
        if (f.size() < 2)
            throw std::invalid_argument("forbidden paths need at least one edge");
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            const auto& out = dag.adj[f[i]];
            if (!std::binary_search(out.begin(), out.end(), f[i + 1]))
                throw std::invalid_argument("forbidden sequence " + path_text(f) +
                                            " is not a path of the digraph");
        }
    }
    if (!allow_overlapping) {
        OverlapWitness w;
        if (!check_nonoverlapping(forbidden, &w))
            throw std::invalid_argument(w.reason +
                                        "; the determinant formula needs pairwise "
                                        "non-overlapping forbidden paths");
    }

    const int k = static_cast<int>(forbidden.size());
    auto weight_of = [&](const PathSeq& f) {
        Int r = 1;
        if (!edge_weight.empty())
            for (std::size_t i = 0; i + 1 < f.size(); ++i) r *= edge_weight[f[i]][f[i + 1]];
        return r;
    };
    std::map<int, std::vector<Int>> from; // dp tables keyed by source vertex
    auto counts = [&](int v) -> const std::vector<Int>& {
        auto it = from.find(v);
        if (it == from.end()) it = from.emplace(v, weighted_counts_from(dag, v, edge_weight)).first;
        return it->second;
    };

    std::vector<std::vector<Int>> m(k + 1, std::vector<Int>(k + 1, 0));
    for (int j = 0; j < k; ++j) {
        const Int wj = weight_of(forbidden[j]);
        const auto& dp = counts(forbidden[j].back());
        for (int i = 0; i < k; ++i)
            m[i][j] = (i == j) ? Int(1) : wj * dp[forbidden[i].front()];
        m[k][j] = wj * dp[sink];
    }
    const auto& dp0 = counts(source);
    for (int i = 0; i < k; ++i) m[i][k] = dp0[forbidden[i].front()];
    m[k][k] = dp0[sink];
    return determinant<Int>(std::move(m));
}

ConeCounter::ConeCounter(const std::string& label)
    : sys_(build_root_system(label)), g_(build_shi_digraph(sys_)) {}

ConeCounter::ConeCounter(RootSystem sys, ShiDigraph g)
    : sys_(std::move(sys)), g_(std::move(g)) {}

std::vector<int> ConeCounter::canonical_roots(const WeylElement& w) const {
    std::vector<int> roots = inverse_inversion_set(w);
    std::sort(roots.begin(), roots.end(), [&](int a, int b) {
        if (sys_.heights[a] != sys_.heights[b]) return sys_.heights[a] < sys_.heights[b];
        return sys_.roots[a] > sys_.roots[b]; // coefficient-lex descending
    });
    return roots;
}

std::vector<PiEntry> ConeCounter::forbidden_for(const WeylElement& w) const {
    return forbidden_for_roots(canonical_roots(w));
}

std::vector<PiEntry> ConeCounter::forbidden_for_roots(const std::vector<int>& roots) const {
    std::vector<PiEntry> pi;
    for (int r : roots)
        for (const Corner& c : g_.corners[r]) pi.push_back({r, c});
    return pi;
}

Int ConeCounter::gamma(int v1, int v2) const {
    const DigraphVertex& a = g_.verts[v1];
    const DigraphVertex& b = g_.verts[v2];
    switch (sys_.family) {
    case 'A': return ballot_count(a.x, a.y, b.x, b.y);
    case 'B':
    case 'C': return gamma_B(a.x, a.y, b.x, b.y, sys_.rank);
    case 'D': return gamma_D(g_, sys_.rank, v1, v2);
    default: {
        auto it = count_cache_.find(v1);
        if (it == count_cache_.end())
            it = count_cache_.emplace(v1, dp_count_from(g_, v1)).first;
        return it->second[v2];
    }
    }
}

Poly ConeCounter::gamma_poly(int v1, int v2) const {
    if (sys_.family == 'A') {
        const DigraphVertex& a = g_.verts[v1];
        const DigraphVertex& b = g_.verts[v2];
        return corner_poly_A(a.x, a.y, b.x, b.y);
    }
    auto it = poly_cache_.find(v1);
    if (it == poly_cache_.end())
        it = poly_cache_.emplace(v1, dp_corner_poly_from(g_, v1)).first;
    return it->second[v2];
}

std::vector<std::vector<Int>> ConeCounter::count_matrix(const std::vector<PiEntry>& pi) const {
    const int k = static_cast<int>(pi.size());
    std::vector<std::vector<Int>> m(k + 1, std::vector<Int>(k + 1, 0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            m[i][j] = (i == j) ? Int(1) : gamma(pi[j].corner.tr, pi[i].corner.bl);
        m[i][k] = gamma(g_.source, pi[i].corner.bl);
    }
    for (int j = 0; j < k; ++j) m[k][j] = gamma(pi[j].corner.tr, g_.sink);
    m[k][k] = gamma(g_.source, g_.sink);
    return m;
}

std::vector<std::vector<Poly>> ConeCounter::poincare_matrix(const std::vector<PiEntry>& pi) const {
    const int k = static_cast<int>(pi.size());
    const Poly t = Poly::t();
    std::vector<std::vector<Poly>> m(k + 1, std::vector<Poly>(k + 1));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            m[i][j] = (i == j) ? Poly(Int(1)) : t * gamma_poly(pi[j].corner.tr, pi[i].corner.bl);
        m[i][k] = gamma_poly(g_.source, pi[i].corner.bl);
    }
    for (int j = 0; j < k; ++j) m[k][j] = t * gamma_poly(pi[j].corner.tr, g_.sink);
    m[k][k] = gamma_poly(g_.source, g_.sink);
    return m;
}

Int ConeCounter::count(const WeylElement& w) const {
    return determinant<Int>(count_matrix(forbidden_for(w)));
}

Poly ConeCounter::poincare(const WeylElement& w) const {
    return determinant<Poly>(poincare_matrix(forbidden_for(w)));
}

ConeTable all_cones_table(const ConeCounter& base, bool with_poincare, int workers,
                          long long max_group_order) {
    GroupEnumeration ge = enumerate_group(base.system(), max_group_order);
    const int n = static_cast<int>(ge.elements.size());
    std::vector<ConeTableRow> rows(n);
    const int nw = std::max(1, workers);

    auto run = [&](int wi, ConeCounter local) {
        for (int idx = wi; idx < n; idx += nw) {
            const WeylElement& w = ge.elements[idx];
            ConeTableRow row;
            row.word = ge.word_of(idx);
            row.length = w.length();
            row.count = local.count(w);
            if (with_poincare) row.poincare = local.poincare(w);
            rows[idx] = std::move(row);
        }
    };
    if (nw == 1) {
        run(0, base);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (int wi = 0; wi < nw; ++wi) pool.emplace_back(run, wi, base);
        for (auto& t : pool) t.join();
    }

    std::sort(rows.begin(), rows.end(), [](const ConeTableRow& a, const ConeTableRow& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });
    ConeTable table;
    table.rows = std::move(rows);
    for (const ConeTableRow& r : table.rows) table.total += r.count;
    return table;
}

} // namespace shicone
