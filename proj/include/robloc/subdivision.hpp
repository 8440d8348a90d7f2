#pragma once

#include "robloc/graph.hpp"

namespace robloc {

enum class VertexClass { Branch, Midpoint, NearMidpoint, InnerOther };

enum class ResidueClass { AtBranch, AtMidpointZone, Other };

// G^{1/m}: every edge of the base graph replaced by a thread of length m.
// Branch vertices keep their base names; an interior vertex at offset k from
// the lexicographically smaller endpoint u of thread (u,v) is named "u~v:k".
// Distances are recomputed by BFS on the subdivided graph, never scaled from
// the base metric, so this type doubles as the oracle for the deduction
// rules checked elsewhere.
class SubdividedGraph {
public:
    SubdividedGraph(Graph base, int m);

    const Graph& graph() const { return sub_; }
    const Graph& base() const { return base_; }
    int m() const { return m_; }

    bool is_branch(VertexId sub_vertex) const;
    VertexId base_vertex(VertexId branch_sub_vertex) const;  // throws on interior vertices
    VertexId branch_of(VertexId base_vertex) const;          // base id -> sub id

    struct ThreadPos {
        VertexId u, v;  // base ids, name of u lexicographically smaller
        int offset;     // 1..m-1, measured from u
    };
    ThreadPos thread_of(VertexId inner_sub_vertex) const;  // throws on branch vertices

    VertexSet branch_vertices() const;  // sub ids, ascending

private:
    static Graph build_sub(const Graph& base, int m);

    Graph base_;
    int m_;
    Graph sub_;
    struct Info {
        bool branch;
        VertexId base;  // branch: base id
        ThreadPos pos;  // interior: thread position
    };
    std::vector<Info> info_;
    std::vector<VertexId> branch_of_;  // base id -> sub id
};

SubdividedGraph subdivide(const Graph& g, int m);

VertexClass classify(const SubdividedGraph& sg, VertexId x);

// The branch vertices nearest to x (sub ids); two exactly when x is a
// midpoint of its thread.
VertexSet vicinity(const SubdividedGraph& sg, VertexId x);

// Base-graph endpoints of the thread containing x; {x^m} when x is a branch
// vertex. Returned as base ids.
VertexSet corr_end(const SubdividedGraph& sg, VertexId x);

// Offset class revealed by the residue of a branch-vertex probe result.
// AtBranch iff d = 0 mod m. The midpoint zone holds exactly the residues
// that Midpoint (even m) or NearMidpoint (odd m) robbers produce.
ResidueClass residue_class(int d, int m);

}  // namespace robloc
