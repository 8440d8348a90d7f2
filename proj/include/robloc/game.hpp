#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "robloc/graph.hpp"

namespace robloc {

enum class Stage { Stage1 = 1, Stage2 = 2, Stage3 = 3 };

// The information a deterministic cop strategy reads. Strategies key on the
// extended robber set by default; round, stage and stride tags exist for
// richer-keyed play and for the subdivision bookkeeping.
struct GameState {
    VertexSet extended;
    int round = 0;
    std::optional<Stage> stage;
    std::optional<int> stride_index;
    std::optional<int> round_index;
};

struct RobberModel {
    enum class Kind { Adversarial, Scripted };
    Kind kind = Kind::Adversarial;
    std::vector<VertexId> walk;  // scripted: positions per round, stay-or-step

    static RobberModel adversarial() { return {}; }
    static RobberModel scripted(std::vector<VertexId> w) {
        return {Kind::Scripted, std::move(w)};
    }
};

// Deterministic map from state keys to probes. Keys are extended robber
// sets, optionally paired with the round number.
class StrategyTable {
public:
    explicit StrategyTable(int cops = 1, bool keyed_by_round = false)
        : cops_(cops), keyed_by_round_(keyed_by_round) {}

    int cops() const { return cops_; }
    bool keyed_by_round() const { return keyed_by_round_; }

    void set(const VertexSet& s, ProbeSet probes) { entries_[{s, -1}] = std::move(probes); }
    void set(const VertexSet& s, int round, ProbeSet probes) { entries_[{s, round}] = std::move(probes); }

    // Null when the strategy is undefined on the state.
    const ProbeSet* find(const VertexSet& s, int round = 0) const {
        auto it = entries_.find({s, keyed_by_round_ ? round : -1});
        return it == entries_.end() ? nullptr : &it->second;
    }

    std::size_t size() const { return entries_.size(); }

    using Key = std::pair<VertexSet, int>;
    const std::map<Key, ProbeSet>& entries() const { return entries_; }

private:
    int cops_;
    bool keyed_by_round_;
    std::map<Key, ProbeSet> entries_;
};

// R = { x in X : dist(probe_i, x) = answer_i for all i }. Empty means the
// answers are inconsistent with X.
VertexSet refine(const VertexSet& X, const ProbeSet& probes, const AnswerVector& answers,
                 const Graph& arena);

// All realizable answer vectors for X under the probes, with their refined
// cells; lexicographic answer order. Cells partition X.
std::vector<std::pair<AnswerVector, VertexSet>> partition_answers(const VertexSet& X,
                                                                  const ProbeSet& probes,
                                                                  const Graph& arena);

// Closed neighborhood: R together with every neighbor of R.
VertexSet expand(const VertexSet& R, const Graph& arena);

struct TraceEntry {
    int round = 0;
    int branch = 0;  // adversarial playouts: index of the answer branch path
    VertexSet state;
    ProbeSet probes;
    AnswerVector answers;
    VertexSet refined;
};

struct PlayResult {
    enum class Outcome { Located, Undecided };
    Outcome outcome = Outcome::Undecided;
    int rounds = 0;  // Located: max rounds over branches to locate
    std::vector<TraceEntry> trace;
};

// Plays the strategy against the robber. Scripted robbers give one trace
// line per round; the adversarial robber explores every consistent answer
// branch and is Located only if all branches locate within max_rounds.
// Throws std::runtime_error naming the state if the strategy is undefined
// on a reached state.
PlayResult play(const StrategyTable& strategy, const Graph& arena, const RobberModel& robber,
                int max_rounds);

}  // namespace robloc
