#pragma once

#include <string>
#include <utility>
#include <vector>

namespace robloc {

using VertexId = int;

// Sorted vector of distinct vertex ids. All set-valued quantities in the
// game (robber sets, extended robber sets, partition cells) use this form,
// so equality and ordering are structural.
using VertexSet = std::vector<VertexId>;

// Ordered list of probed vertices, one per cop; repeats allowed.
using ProbeSet = std::vector<VertexId>;

// Distances answered to one round of probes; aligned with the ProbeSet.
using AnswerVector = std::vector<int>;

// Finite simple connected undirected graph with named vertices and
// all-pairs hop distances computed by BFS at construction time.
// Vertex ids follow first-appearance order in the edge list.
class Graph {
public:
    static Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edges);

    // Explicit vertex list; the only way to build the degenerate one-vertex
    // arena. Vertex order follows the list.
    static Graph from_vertices_and_edges(
        const std::vector<std::string>& vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

    static Graph single(const std::string& name) { return from_vertices_and_edges({name}, {}); }

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::string& name_of(VertexId v) const { return names_.at(static_cast<std::size_t>(v)); }
    VertexId id_of(const std::string& name) const;  // throws std::invalid_argument if unknown
    bool has_vertex(const std::string& name) const;

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_.at(static_cast<std::size_t>(v)); }
    bool adjacent(VertexId u, VertexId v) const;
    int dist(VertexId u, VertexId v) const { return dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
    int diameter() const { return diameter_; }

    // Canonical orientation: lexicographically smaller name first.
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    VertexSet all_vertices() const;

private:
    Graph() = default;

    std::vector<std::string> names_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<int>> dist_;
    int diameter_ = 0;
};

bool set_contains(const VertexSet& s, VertexId v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
bool set_subset(const VertexSet& a, const VertexSet& b);

// Sorted vertex names joined by commas; the canonical key used in strategy
// tables, DOT labels and JSON output.
std::string canonical_set_string(const VertexSet& s, const Graph& g);

}  // namespace robloc
