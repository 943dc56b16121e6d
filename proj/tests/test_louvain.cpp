#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "nhc/graph.hpp"
#include "nhc/louvain.hpp"
#include "nhc/metrics.hpp"

using namespace nhc;

namespace {

DynamicGraph loadKarate() {
    std::ifstream in(std::string(NHC_TEST_DATA_DIR) + "/karate.edges");
    REQUIRE(in.good());
    DynamicGraph g;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        NodeId u = 0;
        NodeId v = 0;
        row >> u >> v;
        g.addEdge(u, v);
    }
    REQUIRE(g.numNodes() == 34);
    REQUIRE(g.numEdges() == 78);
    return g;
}

DynamicGraph twoTriangles() {
    DynamicGraph g;
    g.addEdge(1, 2);
    g.addEdge(2, 3);
    g.addEdge(3, 1);
    g.addEdge(4, 5);
    g.addEdge(5, 6);
    g.addEdge(6, 4);
    return g;
}

std::size_t countCommunities(const Partition& p) {
    std::set<Label> labels;
    for (const auto& [node, label] : p.labels) labels.insert(label);
    return labels.size();
}

} // namespace

TEST_CASE("edgeless graphs are rejected") {
    DynamicGraph g;
    g.addNode(1);
    g.addNode(2);
    CHECK_THROWS_AS(louvain(g, 1), std::invalid_argument);
    CHECK_THROWS_AS(louvain(DynamicGraph{}, 1), std::invalid_argument);
}

TEST_CASE("two disjoint triangles are split exactly") {
    const DynamicGraph g = twoTriangles();
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
        CAPTURE(seed);
        const Dendrogram d = louvain(g, seed);
        const Partition top = flatten(d, d.levels.size() - 1);
        CHECK(countCommunities(top) == 2);
        CHECK(top.labels.at(1) == top.labels.at(2));
        CHECK(top.labels.at(2) == top.labels.at(3));
        CHECK(top.labels.at(4) == top.labels.at(5));
        CHECK(top.labels.at(5) == top.labels.at(6));
        CHECK(top.labels.at(1) != top.labels.at(4));
        CHECK(modularity(g, top) == 0.5);
    }
}

TEST_CASE("karate club solution quality") {
    // Greedy local moves are order-sensitive: roughly one unweighted karate
    // run in fifteen lands on a local optimum just under 0.40 (reference
    // implementations show the same plateau), so the bar is most-seeds, not
    // every seed.
    const DynamicGraph g = loadKarate();
    int goodRuns = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        CAPTURE(seed);
        const Dendrogram d = louvain(g, seed);
        const Partition top = flatten(d, d.levels.size() - 1);
        const double q = modularity(g, top);
        CHECK(q >= 0.38);
        if (countCommunities(top) == 4 && q >= 0.40) ++goodRuns;
    }
    CHECK(goodRuns >= 8);
}

TEST_CASE("modularity never decreases across levels") {
    const DynamicGraph g = loadKarate();
    const Dendrogram d = louvain(g, 3);
    REQUIRE(d.levels.size() >= 2);
    double previous = modularity(g, flatten(d, 0));
    for (std::size_t level = 1; level < d.levels.size(); ++level) {
        const double q = modularity(g, flatten(d, level));
        CHECK(q >= previous - 1e-12);
        previous = q;
    }
}

TEST_CASE("levels chain over the previous level's labels") {
    const Dendrogram d = louvain(loadKarate(), 7);
    for (std::size_t level = 1; level < d.levels.size(); ++level) {
        std::set<Label> previousLabels;
        for (const auto& [node, label] : d.levels[level - 1].labels) previousLabels.insert(label);
        REQUIRE(d.levels[level].labels.size() == previousLabels.size());
        for (Label l : previousLabels) {
            CHECK(d.levels[level].labels.count(static_cast<NodeId>(l)) == 1);
        }
    }
}

TEST_CASE("fixed seeds reproduce the dendrogram") {
    const DynamicGraph g = loadKarate();
    const Dendrogram a = louvain(g, 42);
    const Dendrogram b = louvain(g, 42);
    REQUIRE(a.levels.size() == b.levels.size());
    for (std::size_t level = 0; level < a.levels.size(); ++level) {
        CHECK(a.levels[level] == b.levels[level]);
    }
}

TEST_CASE("flatten composes and validates the level index") {
    const DynamicGraph g = loadKarate();
    const Dendrogram d = louvain(g, 11);
    CHECK(flatten(d, 0) == d.levels[0]);
    CHECK_THROWS_AS(flatten(d, d.levels.size()), std::out_of_range);

    const Partition top = flatten(d, d.levels.size() - 1);
    for (const auto& [node, finest] : d.levels[0].labels) {
        Label composed = finest;
        for (std::size_t level = 1; level < d.levels.size(); ++level) {
            composed = d.levels[level].labels.at(static_cast<NodeId>(composed));
        }
        CHECK(top.labels.at(node) == composed);
    }
}
