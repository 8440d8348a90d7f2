#include "doctest.h"

#include <stdexcept>

#include "fixtures.hpp"
#include "robloc/game.hpp"

using namespace robloc;
using namespace robloc::test;

TEST_CASE("refine") {
    Graph g = make_g5();
    VertexSet all = g.all_vertices();
    VertexId C = g.id_of("C");

    CHECK(refine(all, {C}, {1}, g) == VertexSet{g.id_of("A")});
    VertexSet de{g.id_of("D"), g.id_of("E")};
    std::sort(de.begin(), de.end());
    CHECK(refine(all, {C}, {3}, g) == de);
    CHECK(refine(all, {C}, {0}, g) == VertexSet{C});
    CHECK(refine(all, {C}, {7}, g).empty());  // inconsistent answers give the empty set

    SUBCASE("monotone in the candidate set") {
        VertexSet sub{g.id_of("A"), g.id_of("B")};
        std::sort(sub.begin(), sub.end());
        for (int d = 0; d <= g.diameter(); ++d)
            CHECK(set_subset(refine(sub, {C}, {d}, g), refine(all, {C}, {d}, g)));
    }
}

TEST_CASE("partition_answers") {
    Graph g = make_g5();

    SUBCASE("single probe on G5 gives the four classes of the worked example") {
        auto parts = partition_answers(g.all_vertices(), {g.id_of("C")}, g);
        REQUIRE(parts.size() == 4);
        CHECK(parts[0].first == AnswerVector{0});
        CHECK(parts[0].second == VertexSet{g.id_of("C")});
        CHECK(parts[1].first == AnswerVector{1});
        CHECK(parts[1].second == VertexSet{g.id_of("A")});
        CHECK(parts[2].first == AnswerVector{2});
        CHECK(parts[2].second == VertexSet{g.id_of("B")});
        CHECK(parts[3].first == AnswerVector{3});
        VertexSet de{g.id_of("D"), g.id_of("E")};
        std::sort(de.begin(), de.end());
        CHECK(parts[3].second == de);
    }

    SUBCASE("singleton set gives a single part") {
        auto parts = partition_answers({g.id_of("D")}, {g.id_of("A")}, g);
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].second == VertexSet{g.id_of("D")});
    }

    SUBCASE("two probes separate K3") {
        Graph k3 = make_k3();
        auto parts =
            partition_answers(k3.all_vertices(), {k3.id_of("a"), k3.id_of("b")}, k3);
        REQUIRE(parts.size() == 3);
        CHECK(parts[0].first == AnswerVector{0, 1});
        CHECK(parts[0].second == VertexSet{k3.id_of("a")});
        CHECK(parts[1].first == AnswerVector{1, 0});
        CHECK(parts[1].second == VertexSet{k3.id_of("b")});
        CHECK(parts[2].first == AnswerVector{1, 1});
        CHECK(parts[2].second == VertexSet{k3.id_of("c")});
    }

    SUBCASE("cells partition the input") {
        for (VertexId p = 0; p < g.vertex_count(); ++p) {
            auto parts = partition_answers(g.all_vertices(), {p}, g);
            VertexSet merged;
            for (const auto& [ans, cell] : parts) {
                CHECK(!cell.empty());
                CHECK(set_intersect(merged, cell).empty());
                merged = set_union(merged, cell);
            }
            CHECK(merged == g.all_vertices());
        }
    }
}

TEST_CASE("expand") {
    Graph g = make_g5();
    VertexSet de{g.id_of("D"), g.id_of("E")};
    std::sort(de.begin(), de.end());
    VertexSet bde{g.id_of("B"), g.id_of("D"), g.id_of("E")};
    std::sort(bde.begin(), bde.end());
    CHECK(expand(de, g) == bde);
    CHECK(expand(g.all_vertices(), g) == g.all_vertices());
    VertexSet ca{g.id_of("C"), g.id_of("A")};
    std::sort(ca.begin(), ca.end());
    CHECK(expand({g.id_of("C")}, g) == ca);

    SUBCASE("never escapes the arena and contains its input") {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            VertexSet x = expand({v}, g);
            CHECK(set_contains(x, v));
            CHECK(set_subset(x, g.all_vertices()));
        }
    }
}

TEST_CASE("play") {
    Graph g = make_g5();
    VertexId C = g.id_of("C"), D = g.id_of("D");

    StrategyTable fig1(1);
    fig1.set(g.all_vertices(), {C});
    VertexSet bde{g.id_of("B"), g.id_of("D"), g.id_of("E")};
    std::sort(bde.begin(), bde.end());
    fig1.set(bde, {D});

    SUBCASE("Fig. 1 strategy locates every adversarial branch in two rounds") {
        auto result = play(fig1, g, RobberModel::adversarial(), 10);
        CHECK(result.outcome == PlayResult::Outcome::Located);
        CHECK(result.rounds == 2);
    }

    SUBCASE("one-vertex arena locates at round 0") {
        Graph one = Graph::single("x");
        StrategyTable empty(1);
        auto result = play(empty, one, RobberModel::adversarial(), 5);
        CHECK(result.outcome == PlayResult::Outcome::Located);
        CHECK(result.rounds == 0);
        CHECK(result.trace.empty());
    }

    SUBCASE("scripted robber is always inside the tracked refined set") {
        std::vector<std::vector<std::string>> walks = {
            {"D", "B", "E", "E"}, {"C", "C", "A", "B"}, {"E", "B", "D", "B"}};
        for (const auto& names : walks) {
            std::vector<VertexId> walk;
            for (const auto& n : names) walk.push_back(g.id_of(n));
            auto result = play(fig1, g, RobberModel::scripted(walk), 4);
            for (const auto& entry : result.trace) {
                VertexId pos = walk[std::min<std::size_t>(walk.size() - 1,
                                                          static_cast<std::size_t>(entry.round - 1))];
                CHECK(set_contains(entry.refined, pos));
            }
            CHECK(result.outcome == PlayResult::Outcome::Located);
        }
    }

    SUBCASE("undefined state reports the offending set") {
        StrategyTable partial(1);
        partial.set(g.all_vertices(), {C});
        CHECK_THROWS_WITH_AS(play(partial, g, RobberModel::adversarial(), 10),
                             doctest::Contains("B,D,E"), std::runtime_error);
    }

    SUBCASE("K3 with one cop stays undecided") {
        Graph k3 = make_k3();
        StrategyTable t(1);
        // any fixed single-probe strategy; every state collapses back to V
        t.set(k3.all_vertices(), {k3.id_of("a")});
        auto result = play(t, k3, RobberModel::adversarial(), 10);
        CHECK(result.outcome == PlayResult::Outcome::Undecided);
    }

    SUBCASE("invalid scripted walk rejected") {
        std::vector<VertexId> bad{g.id_of("C"), g.id_of("D")};
        CHECK_THROWS_AS(play(fig1, g, RobberModel::scripted(bad), 5), std::invalid_argument);
    }
}
