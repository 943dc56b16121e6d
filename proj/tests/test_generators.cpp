#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "nhc/generators.hpp"
#include "nhc/graph.hpp"
#include "nhc/hub_policy.hpp"

using namespace nhc;

namespace {

bool isConnected(const DynamicGraph& g) {
    const std::vector<NodeId> nodes = g.nodes();
    if (nodes.empty()) return true;
    std::unordered_set<NodeId> seen{nodes.front()};
    std::queue<NodeId> frontier;
    frontier.push(nodes.front());
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop();
        for (const auto& [v, w] : g.neighbors(u)) {
            if (seen.insert(v).second) frontier.push(v);
        }
    }
    return seen.size() == nodes.size();
}

double averageClustering(const DynamicGraph& g) {
    double sum = 0.0;
    for (NodeId u : g.nodes()) {
        std::vector<NodeId> nbrs;
        for (const auto& [v, w] : g.neighbors(u)) nbrs.push_back(v);
        if (nbrs.size() < 2) continue; // contributes 0
        double links = 0.0;
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (g.hasEdge(nbrs[i], nbrs[j])) links += 1.0;
            }
        }
        const double k = static_cast<double>(nbrs.size());
        sum += 2.0 * links / (k * (k - 1.0));
    }
    return sum / static_cast<double>(g.numNodes());
}

} // namespace

TEST_CASE("growth parameters are validated") {
    CHECK_THROWS_AS(holmeKim({5, 0, 0.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(holmeKim({5, 5, 0.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(holmeKim({0, 1, 0.5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(holmeKim({5, 2, -0.1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(holmeKim({5, 2, 1.5, 1}), std::invalid_argument);
}

TEST_CASE("single attachments without triangle steps grow a tree") {
    const DynamicGraph g = holmeKim({5, 1, 0.0, 7});
    CHECK(g.numNodes() == 5);
    CHECK(g.numEdges() == 4);
    CHECK(isConnected(g));
}

TEST_CASE("every growth run lands exactly (n - m) * m edges") {
    const HolmeKimParams combos[] = {
        {2, 1, 0.0, 3},   {50, 3, 0.5, 1}, {200, 10, 0.7, 2},
        {30, 1, 1.0, 11}, {10, 9, 0.3, 4}, {120, 5, 1.0, 8},
    };
    for (const HolmeKimParams& params : combos) {
        CAPTURE(params.n);
        CAPTURE(params.m);
        CAPTURE(params.p);
        const DynamicGraph g = holmeKim(params);
        CHECK(g.numNodes() == params.n);
        CHECK(g.numEdges() == (params.n - params.m) * params.m);

        for (NodeId u = params.m + 1; u <= params.n; ++u) {
            REQUIRE(g.degree(u) >= params.m);
        }
    }
}

TEST_CASE("triangle steps raise the clustering coefficient") {
    double withTriangles = 0.0;
    double withoutTriangles = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        withTriangles += averageClustering(holmeKim({400, 4, 0.7, seed}));
        withoutTriangles += averageClustering(holmeKim({400, 4, 0.0, seed}));
    }
    CAPTURE(withTriangles / 20.0);
    CAPTURE(withoutTriangles / 20.0);
    CHECK(withTriangles > withoutTriangles);
}

TEST_CASE("degree tail of a large run fits a power law") {
    const DynamicGraph g = holmeKim({10000, 10, 0.0, 5});
    const PowerLawFit fit = estimateGamma(g.degreeSequence(), 10);
    CAPTURE(fit.gamma);
    CHECK(fit.gamma >= 2.5);
    CHECK(fit.gamma <= 3.5);
}

TEST_CASE("fixed seeds reproduce graphs, distinct seeds differ") {
    const HolmeKimParams params{100, 3, 0.3, 42};
    CHECK(holmeKim(params) == holmeKim(params));

    HolmeKimParams other = params;
    other.seed = 43;
    CHECK_FALSE(holmeKim(params) == holmeKim(other));
}

TEST_CASE("scripts sample valid events and replay deterministically") {
    const DynamicGraph g = holmeKim({200, 3, 0.5, 9});

    const MutationScript empty = randomScript(g, 0, 0, 1);
    CHECK(empty.events.empty());

    const MutationScript script = randomScript(g, 100, 40, 17);
    REQUIRE(script.events.size() == 140);
    CHECK(script.seed == 17);
    for (std::size_t i = 0; i < 100; ++i) {
        CHECK(script.events[i].kind == MutationEvent::Kind::AddEdge);
        CHECK(script.events[i].u < script.events[i].v);
    }
    for (std::size_t i = 100; i < 140; ++i) {
        CHECK(script.events[i].kind == MutationEvent::Kind::RemoveEdge);
    }

    // Replaying must succeed (applyEvent rejects any event that is invalid
    // at its point) and land on the same end graph every time.
    DynamicGraph first = g;
    for (const MutationEvent& e : script.events) applyEvent(first, e);
    CHECK(first.numEdges() == g.numEdges() + 100 - 40);

    DynamicGraph second = g;
    for (const MutationEvent& e : script.events) applyEvent(second, e);
    CHECK(first == second);

    const MutationScript again = randomScript(g, 100, 40, 17);
    CHECK(again.events == script.events);
    const MutationScript different = randomScript(g, 100, 40, 18);
    CHECK_FALSE(different.events == script.events);
}

TEST_CASE("additions are distinct absent pairs") {
    const DynamicGraph g = holmeKim({60, 2, 0.4, 3});
    const MutationScript script = randomScript(g, 200, 0, 5);
    std::set<std::pair<NodeId, NodeId>> chosen;
    for (const MutationEvent& e : script.events) {
        CHECK_FALSE(g.hasEdge(e.u, e.v));
        CHECK(chosen.insert({e.u, e.v}).second);
    }
}

TEST_CASE("infeasible scripts are rejected") {
    DynamicGraph complete;
    for (NodeId u = 1; u <= 4; ++u) {
        for (NodeId v = u + 1; v <= 4; ++v) complete.addEdge(u, v);
    }
    CHECK_THROWS_AS(randomScript(complete, 1, 0, 1), std::invalid_argument);
    CHECK_NOTHROW(randomScript(complete, 0, 6, 1));
    CHECK_THROWS_AS(randomScript(complete, 0, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(randomScript(DynamicGraph{}, 0, 1, 1), std::invalid_argument);

    // Removals may consume edges the script itself added.
    DynamicGraph tiny;
    tiny.addEdge(1, 2);
    tiny.addNode(3);
    const MutationScript drain = randomScript(tiny, 2, 3, 2);
    DynamicGraph replay = tiny;
    for (const MutationEvent& e : drain.events) applyEvent(replay, e);
    CHECK(replay.numEdges() == 0);
}

TEST_CASE("events are validated on application") {
    DynamicGraph g;
    g.addEdge(1, 2);
    CHECK_THROWS_AS(applyEvent(g, {MutationEvent::Kind::AddEdge, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(applyEvent(g, {MutationEvent::Kind::RemoveEdge, 1, 3}), std::invalid_argument);
    CHECK_NOTHROW(applyEvent(g, {MutationEvent::Kind::AddEdge, 1, 3}));
    CHECK(g.hasEdge(1, 3));
    CHECK_NOTHROW(applyEvent(g, {MutationEvent::Kind::RemoveEdge, 1, 2}));
    CHECK_FALSE(g.hasEdge(1, 2));
}
