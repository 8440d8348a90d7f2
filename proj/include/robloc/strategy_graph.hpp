#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "robloc/game.hpp"
#include "robloc/graph.hpp"
#include "robloc/subdivision.hpp"

namespace robloc {

// Rooted tree of states reached by a deterministic strategy. Internal nodes
// hold extended robber sets, leaves hold singleton refined sets
// (terminating states). Edges carry the answer vector and the refined cell
// it produced. No cross-branch merging: equal states on different branches
// stay distinct nodes.
struct StrategyGraph {
    struct Edge {
        AnswerVector answer;
        VertexSet refined;
        int child;
    };
    struct Node {
        VertexSet set;
        int depth = 0;   // root 0; the node's probe happens at round depth+1
        int parent = -1;
        ProbeSet probe;  // empty on leaves
        bool leaf = false;
        std::vector<Edge> edges;
        int stride_level = 0;  // assigned by reduce_restricted
        int round_index = 0;
    };

    std::vector<Node> nodes;  // breadth-first order, root at 0
    int root = 0;
    int eta = 0;  // > 0 once stride levels are assigned

    bool has_stride_levels() const { return eta > 0; }
    int max_depth() const;
    int leaf_count() const;
};

struct Divergence {
    enum class Reason { RepeatedState, DepthBudget };
    Reason reason = Reason::DepthBudget;
    std::vector<VertexSet> witness_path;  // root-to-repeat state sets
    VertexSet repeated;                   // RepeatedState only
    std::string message;
};

struct BuildResult {
    std::optional<StrategyGraph> graph;
    std::optional<Divergence> divergence;
};

// Breadth-first expansion of the strategy from the full vertex set. A set
// repeating along a root path is a divergence witness (sound for set-keyed
// strategies: the subtree under the repeat replays forever); hitting the
// depth budget without a repeat is an inconclusive divergence.
BuildResult build_strategy_graph(const StrategyTable& strategy, const Graph& arena,
                                 int depth_budget = 256);

enum class Winningness { Winning, NotWinning, Unknown };

// Theorem-1 test: winning iff the construction terminated with every branch
// on a leaf; a repeated-state witness refutes; a bare budget stop decides
// nothing.
Winningness is_cop_winning(const BuildResult& result);

// Restrictions the mocked robber obeys in the reduced subdivision game.
struct RestrictedRobberRules {
    int eta = 1;                           // rounds per stride, must equal the arena's m
    bool start_at_branch = true;           // initial position is a branch vertex
    bool stride_ends_on_branch = true;     // stride i ends on b_i
    bool no_backtracking = true;           // branch-to-branch strides walk straight
    bool same_vertex_stay_or_midpoint = true;  // else stay all rounds or midpoint-and-back
};

// Restricts h to rule-compliant robber positions: the root set keeps branch
// vertices only and every child set is recomputed as
// expand(refine(reduced parent)) intersected with the offset mask of its
// round index. Nodes whose sets empty out vanish with their subtrees;
// probes are kept from the unreduced nodes. Sets never grow and every
// rule-compliant walk survives.
StrategyGraph reduce_restricted(const StrategyGraph& h, const RestrictedRobberRules& rules,
                                const SubdividedGraph& arena);

// Nodes of the subtree rooted at `node` lying on the given stride levels,
// in breadth-first order. Requires stride levels assigned.
std::vector<int> subtree(const StrategyGraph& h, int node, const std::set<int>& levels);

// Deterministic DOT rendering; node labels are canonical set strings, edge
// labels answer vectors.
std::string export_dot(const StrategyGraph& h, const Graph& arena);

// Total deterministic strategy usable as a Theorem-1 candidate on arenas
// with no winning strategy: at each reachable set, the lexicographically
// first probe multiset minimizing the largest answer cell.
StrategyTable candidate_strategy(const Graph& arena, int cops);

}  // namespace robloc
