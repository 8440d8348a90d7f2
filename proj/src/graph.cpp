#include "robloc/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace robloc {

Graph Graph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
    if (edges.empty())
        throw std::invalid_argument("graph: empty edge list");
    return from_vertices_and_edges({}, edges);
}

Graph Graph::from_vertices_and_edges(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    std::unordered_map<std::string, VertexId> ids;
    auto intern = [&](const std::string& name) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        VertexId v = static_cast<VertexId>(g.names_.size());
        ids.emplace(name, v);
        g.names_.push_back(name);
        g.adj_.emplace_back();
        return v;
    };
    for (const auto& name : vertices) intern(name);

    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [a, b] : edges) {
        if (a == b)
            throw std::invalid_argument("graph: self-loop at vertex '" + a + "'");
        VertexId u = intern(a);
        VertexId v = intern(b);
        // canonical orientation by name
        if (g.names_[static_cast<std::size_t>(v)] < g.names_[static_cast<std::size_t>(u)]) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("graph: duplicate edge '" + a + "'-'" + b + "'");
        g.edges_.push_back({u, v});
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("graph: no vertices");
    g.dist_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (VertexId s = 0; s < n; ++s) {
        auto& d = g.dist_[static_cast<std::size_t>(s)];
        d[static_cast<std::size_t>(s)] = 0;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            for (VertexId w : g.adj_[static_cast<std::size_t>(u)]) {
                if (d[static_cast<std::size_t>(w)] < 0) {
                    d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(u)] + 1;
                    q.push(w);
                }
            }
        }
    }
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) {
            int d = g.dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            if (d < 0)
                throw std::invalid_argument("graph: disconnected (no path between '" +
                                            g.name_of(u) + "' and '" + g.name_of(v) + "')");
            g.diameter_ = std::max(g.diameter_, d);
        }
    return g;
}

VertexId Graph::id_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<VertexId>(i);
    throw std::invalid_argument("graph: unknown vertex '" + name + "'");
}

bool Graph::has_vertex(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto& nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

VertexSet Graph::all_vertices() const {
    VertexSet s(static_cast<std::size_t>(vertex_count()));
    for (int i = 0; i < vertex_count(); ++i) s[static_cast<std::size_t>(i)] = i;
    return s;
}

bool set_contains(const VertexSet& s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string canonical_set_string(const VertexSet& s, const Graph& g) {
    std::vector<std::string> names;
    names.reserve(s.size());
    for (VertexId v : s) names.push_back(g.name_of(v));
    std::sort(names.begin(), names.end());
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ',';
        out += names[i];
    }
    return out;
}

}  // namespace robloc
