#include "robloc/strategy_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace robloc {

int StrategyGraph::max_depth() const {
    int d = 0;
    for (const auto& n : nodes) d = std::max(d, n.depth);
    return d;
}

int StrategyGraph::leaf_count() const {
    int c = 0;
    for (const auto& n : nodes)
        if (n.leaf) ++c;
    return c;
}

BuildResult build_strategy_graph(const StrategyTable& strategy, const Graph& arena,
                                 int depth_budget) {
    StrategyGraph h;
    h.nodes.push_back({arena.all_vertices(), 0, -1, {}, false, {}, 0, 0});

    auto witness_path = [&](int node) {
        std::vector<VertexSet> path;
        for (int i = node; i >= 0; i = h.nodes[static_cast<std::size_t>(i)].parent)
            path.push_back(h.nodes[static_cast<std::size_t>(i)].set);
        std::reverse(path.begin(), path.end());
        return path;
    };

    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        int id = frontier.front();
        frontier.pop_front();
        VertexSet set = h.nodes[static_cast<std::size_t>(id)].set;
        int depth = h.nodes[static_cast<std::size_t>(id)].depth;

        if (set.size() == 1) {
            h.nodes[static_cast<std::size_t>(id)].leaf = true;
            continue;
        }
        if (depth >= depth_budget) {
            Divergence d;
            d.reason = Divergence::Reason::DepthBudget;
            d.witness_path = witness_path(id);
            d.message = "depth budget " + std::to_string(depth_budget) + " reached at state {" +
                        canonical_set_string(set, arena) + "}";
            return {std::nullopt, d};
        }
        if (!strategy.keyed_by_round()) {
            for (int a = h.nodes[static_cast<std::size_t>(id)].parent; a >= 0;
                 a = h.nodes[static_cast<std::size_t>(a)].parent) {
                if (h.nodes[static_cast<std::size_t>(a)].set == set) {
                    Divergence d;
                    d.reason = Divergence::Reason::RepeatedState;
                    d.witness_path = witness_path(id);
                    d.repeated = set;
                    d.message = "state {" + canonical_set_string(set, arena) +
                                "} repeats along a root path";
                    return {std::nullopt, d};
                }
            }
        }

        const ProbeSet* probe = strategy.find(set, depth);
        if (!probe)
            throw std::runtime_error("build_strategy_graph: strategy undefined on state {" +
                                     canonical_set_string(set, arena) + "} at round " +
                                     std::to_string(depth + 1));
        h.nodes[static_cast<std::size_t>(id)].probe = *probe;

        for (const auto& [ans, cell] : partition_answers(set, *probe, arena)) {
            int child = static_cast<int>(h.nodes.size());
            VertexSet child_set = cell.size() == 1 ? cell : expand(cell, arena);
            h.nodes.push_back({child_set, depth + 1, id, {}, cell.size() == 1, {}, 0, 0});
            h.nodes[static_cast<std::size_t>(id)].edges.push_back({ans, cell, child});
            if (cell.size() > 1) frontier.push_back(child);
        }
    }
    return {h, std::nullopt};
}

Winningness is_cop_winning(const BuildResult& result) {
    if (result.graph) return Winningness::Winning;
    if (!result.divergence) return Winningness::Unknown;
    return result.divergence->reason == Divergence::Reason::RepeatedState ? Winningness::NotWinning
                                                                          : Winningness::Unknown;
}

namespace {

// Positions a rule-compliant robber can occupy at probe time of the given
// round index (1..eta), i.e. after round_index-1 moves of its stride:
// branch vertices (stay strides) plus interior offsets round_index-1 or
// eta-round_index+1 measured from the canonical endpoint (straight and
// midpoint-and-back walks, both directions).
VertexSet round_index_mask(const SubdividedGraph& sg, int round_index) {
    const int eta = sg.m();
    VertexSet out;
    for (int s = 0; s < sg.graph().vertex_count(); ++s) {
        if (sg.is_branch(s)) {
            out.push_back(s);
            continue;
        }
        int off = sg.thread_of(s).offset;
        if (off == round_index - 1 || off == eta - (round_index - 1)) out.push_back(s);
    }
    return out;
}

}  // namespace

StrategyGraph reduce_restricted(const StrategyGraph& h, const RestrictedRobberRules& rules,
                                const SubdividedGraph& arena) {
    if (rules.eta < 1) throw std::invalid_argument("reduce_restricted: eta must be >= 1");
    if (rules.eta != arena.m())
        throw std::invalid_argument("reduce_restricted: rules.eta = " + std::to_string(rules.eta) +
                                    " does not match the arena's m = " + std::to_string(arena.m()));
    const int eta = rules.eta;
    std::vector<VertexSet> masks(static_cast<std::size_t>(eta) + 1);
    for (int idx = 1; idx <= eta; ++idx) masks[static_cast<std::size_t>(idx)] = round_index_mask(arena, idx);
    auto mask_at_depth = [&](int depth) -> const VertexSet& {
        return masks[static_cast<std::size_t>(depth % eta + 1)];
    };

    StrategyGraph out;
    out.eta = eta;
    VertexSet root_set = set_intersect(h.nodes[static_cast<std::size_t>(h.root)].set, mask_at_depth(0));
    if (root_set.empty())
        throw std::invalid_argument("reduce_restricted: no branch vertices in the root state");
    out.nodes.push_back({root_set, 0, -1, {}, root_set.size() == 1, {}, 1, 1});

    // pairs of (original node, reduced node); breadth-first keeps ids stable
    std::deque<std::pair<int, int>> frontier{{h.root, 0}};
    const Graph& g = arena.graph();
    while (!frontier.empty()) {
        auto [oid, rid] = frontier.front();
        frontier.pop_front();
        const auto& onode = h.nodes[static_cast<std::size_t>(oid)];
        VertexSet set = out.nodes[static_cast<std::size_t>(rid)].set;
        if (out.nodes[static_cast<std::size_t>(rid)].leaf) continue;
        if (onode.leaf) continue;  // cannot happen: reduced set <= original singleton

        out.nodes[static_cast<std::size_t>(rid)].probe = onode.probe;
        for (const auto& edge : onode.edges) {
            VertexSet refined = refine(set, onode.probe, edge.answer, g);
            if (refined.empty()) continue;
            int depth = onode.depth;
            bool leaf = refined.size() == 1;
            VertexSet child_set =
                leaf ? refined : set_intersect(expand(refined, g), mask_at_depth(depth + 1));
            if (child_set.empty()) continue;
            if (!leaf && child_set.size() == 1) leaf = true;  // the rules alone pin the robber
            int child = static_cast<int>(out.nodes.size());
            out.nodes.push_back({child_set, depth + 1, rid, {}, leaf, {},
                                 (depth + 1) / eta + 1, (depth + 1) % eta + 1});
            out.nodes[static_cast<std::size_t>(rid)].edges.push_back({edge.answer, refined, child});
            if (!leaf) frontier.push_back({edge.child, child});
        }
    }
    return out;
}

std::vector<int> subtree(const StrategyGraph& h, int node, const std::set<int>& levels) {
    if (!h.has_stride_levels())
        throw std::invalid_argument("subtree: stride levels are not assigned (reduce first)");
    if (node < 0 || node >= static_cast<int>(h.nodes.size()))
        throw std::invalid_argument("subtree: node out of range");
    std::vector<int> out;
    std::deque<int> frontier{node};
    while (!frontier.empty()) {
        int id = frontier.front();
        frontier.pop_front();
        if (levels.count(h.nodes[static_cast<std::size_t>(id)].stride_level)) out.push_back(id);
        for (const auto& e : h.nodes[static_cast<std::size_t>(id)].edges) frontier.push_back(e.child);
    }
    return out;
}

std::string export_dot(const StrategyGraph& h, const Graph& arena) {
    std::ostringstream os;
    os << "digraph H {\n";
    os << "  rankdir=TB;\n";
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
        const auto& n = h.nodes[i];
        os << "  n" << i << " [label=\"{" << canonical_set_string(n.set, arena) << "}\"";
        if (n.leaf) os << ", shape=doublecircle";
        if (!n.probe.empty()) {
            os << ", xlabel=\"probe ";
            for (std::size_t j = 0; j < n.probe.size(); ++j)
                os << (j ? "," : "") << arena.name_of(n.probe[j]);
            os << "\"";
        }
        os << "];\n";
    }
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
        for (const auto& e : h.nodes[i].edges) {
            os << "  n" << i << " -> n" << e.child << " [label=\"(";
            for (std::size_t j = 0; j < e.answer.size(); ++j) os << (j ? "," : "") << e.answer[j];
            os << ")\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

StrategyTable candidate_strategy(const Graph& arena, int cops) {
    if (cops < 1) throw std::invalid_argument("candidate_strategy: cop count must be >= 1");
    std::vector<ProbeSet> candidates;
    ProbeSet cur(static_cast<std::size_t>(cops), 0);
    // lexicographic k-multisets, same order the solver scans
    auto rec = [&](auto&& self, std::size_t pos, VertexId min_v) -> void {
        if (pos == cur.size()) {
            candidates.push_back(cur);
            return;
        }
        for (VertexId v = min_v; v < arena.vertex_count(); ++v) {
            cur[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);

    StrategyTable table(cops);
    std::deque<VertexSet> frontier{arena.all_vertices()};
    std::set<VertexSet> seen{arena.all_vertices()};
    while (!frontier.empty()) {
        VertexSet set = frontier.front();
        frontier.pop_front();
        if (set.size() == 1) continue;
        std::size_t best_cell = set.size() + 1;
        const ProbeSet* best = nullptr;
        for (const ProbeSet& p : candidates) {
            std::size_t largest = 0;
            for (const auto& [ans, cell] : partition_answers(set, p, arena))
                largest = std::max(largest, cell.size());
            if (largest < best_cell) {
                best_cell = largest;
                best = &p;
            }
        }
        table.set(set, *best);
        for (const auto& [ans, cell] : partition_answers(set, *best, arena)) {
            if (cell.size() == 1) continue;
            VertexSet next = expand(cell, arena);
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return table;
}

}  // namespace robloc
