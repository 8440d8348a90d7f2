#include "robloc/game.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace robloc {

VertexSet refine(const VertexSet& X, const ProbeSet& probes, const AnswerVector& answers,
                 const Graph& arena) {
    if (probes.size() != answers.size())
        throw std::invalid_argument("refine: probe/answer length mismatch");
    VertexSet out;
    for (VertexId x : X) {
        bool ok = true;
        for (std::size_t i = 0; i < probes.size(); ++i) {
            if (arena.dist(probes[i], x) != answers[i]) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

std::vector<std::pair<AnswerVector, VertexSet>> partition_answers(const VertexSet& X,
                                                                  const ProbeSet& probes,
                                                                  const Graph& arena) {
    std::map<AnswerVector, VertexSet> cells;
    for (VertexId x : X) {
        AnswerVector ans(probes.size());
        for (std::size_t i = 0; i < probes.size(); ++i) ans[i] = arena.dist(probes[i], x);
        cells[ans].push_back(x);
    }
    return {cells.begin(), cells.end()};
}

VertexSet expand(const VertexSet& R, const Graph& arena) {
    VertexSet out = R;
    for (VertexId x : R)
        for (VertexId n : arena.neighbors(x)) out.push_back(n);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

const ProbeSet& probes_for(const StrategyTable& strategy, const VertexSet& state, int round,
                           const Graph& arena) {
    const ProbeSet* p = strategy.find(state, round);
    if (!p)
        throw std::runtime_error("play: strategy undefined on state {" +
                                 canonical_set_string(state, arena) + "} at round " +
                                 std::to_string(round));
    return *p;
}

// Depth-first over all consistent answer branches. Returns the max rounds
// needed to locate, or nullopt if some branch survives past max_rounds.
std::optional<int> play_adversarial(const StrategyTable& strategy, const Graph& arena,
                                    const VertexSet& X, int round, int max_rounds, int& branch,
                                    std::vector<TraceEntry>& trace) {
    if (X.size() == 1) return round;
    if (round >= max_rounds) return std::nullopt;
    const ProbeSet& probes = probes_for(strategy, X, round, arena);
    std::optional<int> worst = 0;
    for (const auto& [ans, cell] : partition_answers(X, probes, arena)) {
        trace.push_back({round + 1, branch, X, probes, ans, cell});
        if (cell.size() == 1) {
            worst = std::max(worst, std::optional<int>(round + 1));
            ++branch;
            continue;
        }
        auto sub = play_adversarial(strategy, arena, expand(cell, arena), round + 1, max_rounds,
                                    branch, trace);
        if (!sub) return std::nullopt;
        worst = std::max(worst, sub);
    }
    return worst;
}

}  // namespace

PlayResult play(const StrategyTable& strategy, const Graph& arena, const RobberModel& robber,
                int max_rounds) {
    PlayResult result;
    VertexSet X = arena.all_vertices();
    if (X.size() == 1) {
        result.outcome = PlayResult::Outcome::Located;
        result.rounds = 0;
        return result;
    }

    if (robber.kind == RobberModel::Kind::Adversarial) {
        int branch = 0;
        auto rounds = play_adversarial(strategy, arena, X, 0, max_rounds, branch, result.trace);
        if (rounds) {
            result.outcome = PlayResult::Outcome::Located;
            result.rounds = *rounds;
        }
        return result;
    }

    if (robber.walk.empty()) throw std::invalid_argument("play: scripted robber with empty walk");
    for (std::size_t i = 0; i + 1 < robber.walk.size(); ++i) {
        VertexId a = robber.walk[i], b = robber.walk[i + 1];
        if (a != b && !arena.adjacent(a, b))
            throw std::invalid_argument("play: scripted walk step '" + arena.name_of(a) + "' -> '" +
                                        arena.name_of(b) + "' is not stay-or-move-to-neighbor");
    }

    for (int round = 1; round <= max_rounds; ++round) {
        VertexId pos = robber.walk[std::min<std::size_t>(robber.walk.size() - 1,
                                                         static_cast<std::size_t>(round - 1))];
        const ProbeSet& probes = probes_for(strategy, X, round - 1, arena);
        AnswerVector ans(probes.size());
        for (std::size_t i = 0; i < probes.size(); ++i) ans[i] = arena.dist(probes[i], pos);
        VertexSet R = refine(X, probes, ans, arena);
        result.trace.push_back({round, 0, X, probes, ans, R});
        if (R.size() == 1) {
            result.outcome = PlayResult::Outcome::Located;
            result.rounds = round;
            return result;
        }
        X = expand(R, arena);
    }
    return result;
}

}  // namespace robloc
