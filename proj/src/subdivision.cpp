#include "robloc/subdivision.hpp"

#include <algorithm>
#include <stdexcept>

namespace robloc {

Graph SubdividedGraph::build_sub(const Graph& base, int m) {
    if (m < 1) throw std::invalid_argument("subdivide: m must be >= 1");

    // Threads in lexicographic edge order keeps vertex numbering stable.
    auto edges = base.edges();
    std::sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
        return std::make_pair(base.name_of(a.first), base.name_of(a.second)) <
               std::make_pair(base.name_of(b.first), base.name_of(b.second));
    });

    std::vector<std::pair<std::string, std::string>> sub_edges;
    for (const auto& [u, v] : edges) {
        std::string prev = base.name_of(u);
        for (int k = 1; k < m; ++k) {
            std::string inner = base.name_of(u) + "~" + base.name_of(v) + ":" + std::to_string(k);
            sub_edges.emplace_back(prev, inner);
            prev = inner;
        }
        sub_edges.emplace_back(prev, base.name_of(v));
    }
    return Graph::from_edges(sub_edges);
}

SubdividedGraph::SubdividedGraph(Graph base, int m)
    : base_(std::move(base)), m_(m), sub_(build_sub(base_, m)) {
    info_.assign(static_cast<std::size_t>(sub_.vertex_count()), Info{});
    branch_of_.assign(static_cast<std::size_t>(base_.vertex_count()), -1);
    for (int s = 0; s < sub_.vertex_count(); ++s) {
        const std::string& name = sub_.name_of(s);
        auto tilde = name.find('~');
        if (tilde == std::string::npos) {
            info_[static_cast<std::size_t>(s)] = Info{true, base_.id_of(name), {}};
            branch_of_[static_cast<std::size_t>(base_.id_of(name))] = s;
        } else {
            auto colon = name.rfind(':');
            ThreadPos pos;
            pos.u = base_.id_of(name.substr(0, tilde));
            pos.v = base_.id_of(name.substr(tilde + 1, colon - tilde - 1));
            pos.offset = std::stoi(name.substr(colon + 1));
            info_[static_cast<std::size_t>(s)] = Info{false, -1, pos};
        }
    }
}

bool SubdividedGraph::is_branch(VertexId s) const {
    return info_.at(static_cast<std::size_t>(s)).branch;
}

VertexId SubdividedGraph::base_vertex(VertexId s) const {
    const auto& i = info_.at(static_cast<std::size_t>(s));
    if (!i.branch) throw std::invalid_argument("base_vertex: '" + sub_.name_of(s) + "' is not a branch vertex");
    return i.base;
}

VertexId SubdividedGraph::branch_of(VertexId b) const {
    return branch_of_.at(static_cast<std::size_t>(b));
}

SubdividedGraph::ThreadPos SubdividedGraph::thread_of(VertexId s) const {
    const auto& i = info_.at(static_cast<std::size_t>(s));
    if (i.branch) throw std::invalid_argument("thread_of: '" + sub_.name_of(s) + "' is a branch vertex");
    return i.pos;
}

VertexSet SubdividedGraph::branch_vertices() const {
    VertexSet out;
    for (int s = 0; s < sub_.vertex_count(); ++s)
        if (is_branch(s)) out.push_back(s);
    return out;
}

SubdividedGraph subdivide(const Graph& g, int m) {
    return SubdividedGraph(g, m);
}

VertexClass classify(const SubdividedGraph& sg, VertexId x) {
    if (sg.is_branch(x)) return VertexClass::Branch;
    auto pos = sg.thread_of(x);
    const int m = sg.m();
    const int to_u = pos.offset;
    const int to_v = m - pos.offset;
    if (to_u == to_v) return VertexClass::Midpoint;  // requires even m
    if (std::min(to_u, to_v) == (m - 1) / 2 && m % 2 == 1) return VertexClass::NearMidpoint;
    return VertexClass::InnerOther;
}

VertexSet vicinity(const SubdividedGraph& sg, VertexId x) {
    if (sg.is_branch(x)) return {x};
    auto pos = sg.thread_of(x);
    const int to_u = pos.offset;
    const int to_v = sg.m() - pos.offset;
    VertexSet out;
    if (to_u <= to_v) out.push_back(sg.branch_of(pos.u));
    if (to_v <= to_u) out.push_back(sg.branch_of(pos.v));
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet corr_end(const SubdividedGraph& sg, VertexId x) {
    if (sg.is_branch(x)) return {sg.base_vertex(x)};
    auto pos = sg.thread_of(x);
    VertexSet out{pos.u, pos.v};
    std::sort(out.begin(), out.end());
    return out;
}

ResidueClass residue_class(int d, int m) {
    if (m <= 1) throw std::invalid_argument("residue_class: m must be >= 2 (no thread interior)");
    if (d < 0) throw std::invalid_argument("residue_class: negative distance");
    const int r = d % m;
    if (r == 0) return ResidueClass::AtBranch;
    if (m % 2 == 0) {
        if (r == m / 2) return ResidueClass::AtMidpointZone;
    } else {
        if (r == (m - 1) / 2 || r == (m + 1) / 2) return ResidueClass::AtMidpointZone;
    }
    return ResidueClass::Other;
}

}  // namespace robloc
