#pragma once

#include <cstddef>
#include <optional>

#include "robloc/game.hpp"
#include "robloc/graph.hpp"

namespace robloc {

struct SolverBudget {
    std::size_t max_states = 200000;  // distinct extended robber sets
    int max_rounds = 4096;            // capture-time cap (value-iteration passes)
};

struct Verdict {
    enum class Kind { Winning, NotWinning, BudgetExceeded };
    Kind kind = Kind::BudgetExceeded;
    int capture_time = -1;      // Winning only
    StrategyTable strategy;     // Winning only; keyed by extended robber set
    std::size_t states_explored = 0;
};

// Exact decision by least fixpoint over reachable extended robber sets:
// a set is t-winning if some probe multiset makes every answer cell either
// a singleton or, after expansion, (t-1)-winning. Winning iff the full
// vertex set gets a finite label; the label is the capture time. Probe
// candidates are scanned as k-multisets in lexicographic id order, which
// fixes the extracted strategy's tie-breaks. `threads` parallelizes the
// per-pass evaluation and never changes any output.
Verdict decide_localizable(const Graph& arena, int cops, const SolverBudget& budget = {},
                           int threads = 1);

struct ParamSearch {
    std::optional<int> value;      // smallest k (resp. m) that wins
    Verdict verdict;               // verdict at `value`, or the last attempt
    bool budget_exceeded = false;  // some attempt hit a budget
};

// Smallest k <= k_max with a winning verdict (localization number).
ParamSearch localization_number(const Graph& g, int k_max, const SolverBudget& budget = {},
                                int threads = 1);

// Smallest m <= m_max such that G^{1/m} is 1-cop localizable (subdivision
// number); capture time reported in rounds of G^{1/m}.
ParamSearch subdivision_number(const Graph& g, int m_max, const SolverBudget& budget = {},
                               int threads = 1);

// Winning strategy table; throws std::runtime_error on non-winning arenas.
StrategyTable extract_strategy(const Graph& arena, int cops, const SolverBudget& budget = {},
                               int threads = 1);

}  // namespace robloc
