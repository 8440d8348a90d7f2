#include "robloc/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "robloc/subdivision.hpp"

namespace robloc {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

using Mask = std::uint64_t;

struct Space {
    const Graph& g;
    int n;
    std::vector<Mask> closed_nbr;            // closed neighborhood per vertex
    std::vector<std::vector<int>> dist;      // copied for flat access
    std::vector<ProbeSet> probe_candidates;  // k-multisets, lexicographic

    explicit Space(const Graph& graph, int cops) : g(graph), n(graph.vertex_count()) {
        if (n > 64)
            throw std::invalid_argument("solver: arenas above 64 vertices are unsupported");
        if (cops < 1) throw std::invalid_argument("solver: cop count must be >= 1");
        if (cops > 8) throw std::invalid_argument("solver: more than 8 cops unsupported");
        closed_nbr.resize(static_cast<std::size_t>(n));
        dist.resize(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
        for (int v = 0; v < n; ++v) {
            Mask m = Mask{1} << v;
            for (VertexId w : g.neighbors(v)) m |= Mask{1} << w;
            closed_nbr[static_cast<std::size_t>(v)] = m;
            for (int w = 0; w < n; ++w) dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = g.dist(v, w);
        }
        ProbeSet cur(static_cast<std::size_t>(cops), 0);
        enumerate_multisets(cur, 0, 0);
    }

    void enumerate_multisets(ProbeSet& cur, std::size_t pos, VertexId min_v) {
        if (pos == cur.size()) {
            probe_candidates.push_back(cur);
            return;
        }
        for (VertexId v = min_v; v < n; ++v) {
            cur[pos] = v;
            enumerate_multisets(cur, pos + 1, v);
        }
    }

    Mask expand(Mask r) const {
        Mask out = 0;
        for (Mask m = r; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            out |= closed_nbr[static_cast<std::size_t>(v)];
        }
        return out;
    }

    // Answer cells of X under the probes, as masks. Order is irrelevant to
    // the fixpoint; only probe order carries tie-break meaning.
    void cells(Mask x, const ProbeSet& probes, std::vector<std::pair<std::uint64_t, Mask>>& out) const {
        out.clear();
        for (Mask m = x; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            std::uint64_t key = 0;
            for (VertexId p : probes)
                key = (key << 8) | static_cast<std::uint64_t>(dist[static_cast<std::size_t>(p)][static_cast<std::size_t>(v)]);
            bool found = false;
            for (auto& [k, cell] : out)
                if (k == key) {
                    cell |= Mask{1} << v;
                    found = true;
                    break;
                }
            if (!found) out.push_back({key, Mask{1} << v});
        }
    }
};

VertexSet to_set(Mask m) {
    VertexSet s;
    while (m) {
        s.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

}  // namespace

Verdict decide_localizable(const Graph& arena, int cops, const SolverBudget& budget, int threads) {
    Space sp(arena, cops);
    const Mask full = sp.n == 64 ? ~Mask{0} : (Mask{1} << sp.n) - 1;

    // Reachable set space from the initial extended set.
    std::vector<Mask> nodes;
    std::unordered_map<Mask, int> index;
    bool over_budget = false;
    auto intern = [&](Mask m) -> int {
        auto it = index.find(m);
        if (it != index.end()) return it->second;
        if (nodes.size() >= budget.max_states) {
            over_budget = true;
            return -1;
        }
        int id = static_cast<int>(nodes.size());
        nodes.push_back(m);
        index.emplace(m, id);
        return id;
    };
    intern(full);
    std::vector<std::pair<std::uint64_t, Mask>> scratch;
    for (std::size_t head = 0; head < nodes.size() && !over_budget; ++head) {
        Mask x = nodes[head];
        if (std::popcount(x) == 1) continue;
        for (const ProbeSet& p : sp.probe_candidates) {
            sp.cells(x, p, scratch);
            for (const auto& [key, cell] : scratch) {
                (void)key;
                if (std::popcount(cell) > 1) {
                    if (intern(sp.expand(cell)) < 0) break;
                }
            }
            if (over_budget) break;
        }
    }

    Verdict verdict;
    verdict.states_explored = nodes.size();
    if (over_budget) {
        verdict.kind = Verdict::Kind::BudgetExceeded;
        return verdict;
    }

    // Value iteration from the terminals; pass t labels exactly the sets
    // winnable within t rounds, so convergence gives minimal capture times.
    std::vector<int> label(nodes.size(), kInf);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (std::popcount(nodes[i]) == 1) label[i] = 0;

    auto evaluate = [&](std::size_t i, const std::vector<int>& snapshot) -> int {
        Mask x = nodes[i];
        std::vector<std::pair<std::uint64_t, Mask>> local;
        int best = kInf;
        for (const ProbeSet& p : sp.probe_candidates) {
            sp.cells(x, p, local);
            int worst = 0;
            for (const auto& [key, cell] : local) {
                (void)key;
                if (std::popcount(cell) == 1) continue;
                int l = snapshot[static_cast<std::size_t>(index.at(sp.expand(cell)))];
                worst = std::max(worst, l);
                if (worst == kInf) break;
            }
            if (worst != kInf) best = std::min(best, worst + 1);
            if (best == 1) break;  // cannot do better than one round
        }
        return best;
    };

    const int nthreads = std::max(1, threads);
    bool converged = false;
    for (int pass = 1; pass <= budget.max_rounds && !converged; ++pass) {
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (label[i] == kInf) open.push_back(i);
        if (open.empty()) break;

        std::vector<int> next(open.size(), kInf);
        auto work = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t j = lo; j < hi; ++j) next[j] = evaluate(open[j], label);
        };
        if (nthreads == 1 || open.size() < 32) {
            work(0, open.size());
        } else {
            std::vector<std::thread> pool;
            std::size_t chunk = (open.size() + static_cast<std::size_t>(nthreads) - 1) / static_cast<std::size_t>(nthreads);
            for (int t = 0; t < nthreads; ++t) {
                std::size_t lo = static_cast<std::size_t>(t) * chunk;
                std::size_t hi = std::min(open.size(), lo + chunk);
                if (lo < hi) pool.emplace_back(work, lo, hi);
            }
            for (auto& th : pool) th.join();
        }

        bool changed = false;
        for (std::size_t j = 0; j < open.size(); ++j)
            if (next[j] != kInf) {
                label[open[j]] = next[j];
                changed = true;
            }
        converged = !changed;
    }

    if (label[0] == kInf) {
        // labels set in pass t are minimal capture times and never revised,
        // so an unconverged run cannot rule the full set out
        verdict.kind = converged ? Verdict::Kind::NotWinning : Verdict::Kind::BudgetExceeded;
        return verdict;
    }

    verdict.kind = Verdict::Kind::Winning;
    verdict.capture_time = label[0];
    verdict.strategy = StrategyTable(cops);
    std::vector<std::pair<std::uint64_t, Mask>> local;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (label[i] == kInf || std::popcount(nodes[i]) == 1) continue;
        // first lexicographic probe achieving the label
        for (const ProbeSet& p : sp.probe_candidates) {
            sp.cells(nodes[i], p, local);
            int worst = 0;
            for (const auto& [key, cell] : local) {
                (void)key;
                if (std::popcount(cell) == 1) continue;
                int l = label[static_cast<std::size_t>(index.at(sp.expand(cell)))];
                worst = worst == kInf || l == kInf ? kInf : std::max(worst, l);
                if (worst == kInf) break;
            }
            if (worst != kInf && worst + 1 == label[i]) {
                verdict.strategy.set(to_set(nodes[i]), p);
                break;
            }
        }
    }
    return verdict;
}

ParamSearch localization_number(const Graph& g, int k_max, const SolverBudget& budget, int threads) {
    ParamSearch out;
    for (int k = 1; k <= k_max; ++k) {
        out.verdict = decide_localizable(g, k, budget, threads);
        if (out.verdict.kind == Verdict::Kind::Winning) {
            out.value = k;
            return out;
        }
        if (out.verdict.kind == Verdict::Kind::BudgetExceeded) out.budget_exceeded = true;
    }
    return out;
}

ParamSearch subdivision_number(const Graph& g, int m_max, const SolverBudget& budget, int threads) {
    ParamSearch out;
    for (int m = 1; m <= m_max; ++m) {
        SubdividedGraph sg(g, m);
        out.verdict = decide_localizable(sg.graph(), 1, budget, threads);
        if (out.verdict.kind == Verdict::Kind::Winning) {
            out.value = m;
            return out;
        }
        if (out.verdict.kind == Verdict::Kind::BudgetExceeded) out.budget_exceeded = true;
    }
    return out;
}

StrategyTable extract_strategy(const Graph& arena, int cops, const SolverBudget& budget, int threads) {
    Verdict v = decide_localizable(arena, cops, budget, threads);
    if (v.kind != Verdict::Kind::Winning)
        throw std::runtime_error("extract_strategy: arena is not cop-winning with " +
                                 std::to_string(cops) + " cop(s)");
    return v.strategy;
}

}  // namespace robloc
