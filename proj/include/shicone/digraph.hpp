#pragma once

#include "shicone/root_system.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace shicone {

// Vertex of a region-counting digraph. (x, y) are lattice coordinates inside
// the vertex's component; (u, v) identify the component ("part" u, copy v).
// Single-component digraphs (families A, B, C and G2) use part (1, 0).
struct DigraphVertex {
    int x = 0, y = 0, u = 1, v = 0;
    bool operator==(const DigraphVertex&) const = default;
};

// One corner: the east edge bl->br followed by the north edge br->tr.
struct Corner {
    int bl = -1, br = -1, tr = -1;
    bool operator==(const Corner&) const = default;
};

// Acyclic digraph whose source-to-sink paths biject with antichains of the
// positive root poset; each positive root owns one or more corners, and the
// corners a path passes through read off the antichain.
struct ShiDigraph {
    std::string type;              // root-system label, e.g. "B4"
    std::vector<DigraphVertex> verts;
    std::vector<std::vector<int>> adj;   // out-neighbours, sorted
    std::vector<std::vector<int>> radj;  // in-neighbours, sorted
    int source = -1;
    int sink = -1;
    // corners[r] lists the corner instances of positive root r (indices into
    // the accompanying RootSystem's root order).
    std::vector<std::vector<Corner>> corners;

    int num_vertices() const { return static_cast<int>(verts.size()); }
    int num_edges() const;
    bool has_edge(int from, int to) const;
    int vertex_id(int x, int y, int u = 1, int v = 0) const; // -1 if absent

    // Vertex ids in a topological order (throws std::logic_error on a cycle).
    std::vector<int> topo_order() const;

    std::string vertex_name(int id) const; // "x,y(u,v)" as used in DOT labels

private:
    std::map<std::tuple<int, int, int, int>, int> id_;
    friend class DigraphBuilder;
    friend ShiDigraph load_digraph_json(const RootSystem& sys, const std::string& text);
};

// Builders for the families with algorithmic constructions. The RootSystem
// passed to build_shi_digraph selects the right one; F4 and G2 ship embedded,
// E6 must be loaded from JSON (build_shi_digraph throws MissingData for E types).
ShiDigraph build_digraph_A(int n);               // n >= 1
ShiDigraph build_digraph_B(int n, char family = 'B'); // n >= 2; 'C' relabels boxes
ShiDigraph build_digraph_D(int n);               // n >= 4
ShiDigraph build_digraph_G2();
ShiDigraph build_digraph_F4();
ShiDigraph build_shi_digraph(const RootSystem& sys);

// Structural and semantic validation: acyclicity, unique source/sink, every
// root covered by at least one corner, corners pairwise edge-disjoint, and
// (for systems with at most 40 positive roots) the full bijection between
// source-sink paths and poset antichains.
struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
};
ValidationReport validate_digraph(const RootSystem& sys, const ShiDigraph& g);

// Deterministic serialization (vertices and edges sorted by id).
std::string export_digraph_dot(const RootSystem& sys, const ShiDigraph& g);
std::string export_digraph_json(const RootSystem& sys, const ShiDigraph& g);
ShiDigraph load_digraph_json(const RootSystem& sys, const std::string& text);

// Plain DAG with explicit endpoints, used by the determinant machinery for
// graphs that are not region digraphs (counterexample fixtures, random tests).
struct SimpleDag {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::vector<int>> radj;

    static SimpleDag from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    std::vector<int> topo_order() const;
};

// A path is the sequence of vertices it visits (>= 2 of them).
using PathSeq = std::vector<int>;

} // namespace shicone
