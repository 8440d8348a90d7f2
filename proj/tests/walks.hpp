#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "robloc/subdivision.hpp"

namespace robloc::test {

// Interior vertex at the given offset from base vertex `from` along the
// thread to base vertex `to`; offset 0 and eta give the branch vertices.
inline VertexId thread_vertex(const SubdividedGraph& sg, VertexId from, VertexId to, int offset) {
    if (offset == 0) return sg.branch_of(from);
    if (offset == sg.m()) return sg.branch_of(to);
    const std::string& a = sg.base().name_of(from);
    const std::string& b = sg.base().name_of(to);
    std::string name = a < b ? a + "~" + b + ":" + std::to_string(offset)
                             : b + "~" + a + ":" + std::to_string(sg.m() - offset);
    return sg.graph().id_of(name);
}

// Every rule-compliant robber walk of the restricted subdivision game, as
// per-round positions (entry r = position at probe time of round r+1, so
// entry 0 is the initial branch vertex). A stride either crosses a thread
// straight, stays put, or (even eta) goes out to a midpoint and back.
inline std::vector<std::vector<VertexId>> compliant_walks(const SubdividedGraph& sg, int strides) {
    const int eta = sg.m();
    const Graph& base = sg.base();

    struct Option {
        VertexId end_base;
        std::vector<VertexId> positions;  // eta entries: after move 1..eta
    };
    auto options_from = [&](VertexId b) {
        std::vector<Option> opts;
        opts.push_back({b, std::vector<VertexId>(static_cast<std::size_t>(eta), sg.branch_of(b))});
        for (VertexId c : base.neighbors(b)) {
            Option straight{c, {}};
            for (int j = 1; j <= eta; ++j) straight.positions.push_back(thread_vertex(sg, b, c, j));
            opts.push_back(std::move(straight));
            if (eta % 2 == 0 && eta >= 2) {
                Option bounce{b, {}};
                for (int j = 1; j <= eta; ++j)
                    bounce.positions.push_back(thread_vertex(sg, b, c, std::min(j, eta - j)));
                opts.push_back(std::move(bounce));
            }
        }
        return opts;
    };

    struct Partial {
        VertexId at;
        std::vector<VertexId> positions;
    };
    std::vector<Partial> frontier;
    for (VertexId b = 0; b < base.vertex_count(); ++b)
        frontier.push_back({b, {sg.branch_of(b)}});
    for (int s = 0; s < strides; ++s) {
        std::vector<Partial> next;
        for (const auto& p : frontier) {
            for (const auto& opt : options_from(p.at)) {
                Partial q{opt.end_base, p.positions};
                q.positions.insert(q.positions.end(), opt.positions.begin(), opt.positions.end());
                next.push_back(std::move(q));
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<VertexId>> walks;
    walks.reserve(frontier.size());
    for (auto& p : frontier) walks.push_back(std::move(p.positions));
    return walks;
}

}  // namespace robloc::test
