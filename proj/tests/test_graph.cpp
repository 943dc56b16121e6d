#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "nhc/graph.hpp"

using namespace nhc;

TEST_CASE("nodes are created once and edges create missing endpoints") {
    DynamicGraph g;
    g.addNode(1);
    g.addNode(1);
    CHECK(g.numNodes() == 1);
    CHECK(g.hasNode(1));
    CHECK_FALSE(g.hasNode(2));

    CHECK(g.addEdge(1, 2));
    CHECK(g.hasNode(2));
    CHECK(g.numNodes() == 2);
    CHECK(g.numEdges() == 1);
    CHECK(g.hasEdge(1, 2));
    CHECK(g.hasEdge(2, 1));
    CHECK(g.edgeWeight(2, 1) == 1.0);
}

TEST_CASE("re-adding an edge only updates the weight") {
    DynamicGraph g;
    CHECK(g.addEdge(1, 2, 2.5));
    CHECK_FALSE(g.addEdge(2, 1, 7.0));
    CHECK(g.numEdges() == 1);
    CHECK(g.edgeWeight(1, 2) == 7.0);
}

TEST_CASE("self-loops and non-positive weights are rejected") {
    DynamicGraph g;
    CHECK_THROWS_AS(g.addEdge(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.addEdge(1, 2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(g.addEdge(1, 2, -1.0), std::invalid_argument);
    CHECK(g.numEdges() == 0);
}

TEST_CASE("removing a missing edge or querying a missing node throws") {
    DynamicGraph g;
    g.addEdge(1, 2);
    CHECK_THROWS_AS(g.removeEdge(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.edgeWeight(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.degree(99), std::invalid_argument);
    CHECK_THROWS_AS(g.neighbors(99), std::invalid_argument);
}

TEST_CASE("removeNode returns the incident edges and detaches the node") {
    DynamicGraph g;
    g.addEdge(1, 2, 1.0);
    g.addEdge(1, 3, 2.0);
    g.addEdge(2, 3, 1.0);
    g.addNode(4);

    auto removed = g.removeNode(1);
    CHECK(removed.size() == 2);
    for (const auto& e : removed) {
        CHECK((e.u == 1 || e.v == 1));
        CHECK(g.hasEdge(e.u, e.v) == false);
    }
    CHECK_FALSE(g.hasNode(1));
    CHECK(g.numNodes() == 3);
    CHECK(g.numEdges() == 1);
    CHECK(g.hasEdge(2, 3));

    auto isolated = g.removeNode(4);
    CHECK(isolated.empty());
    CHECK_THROWS_AS(g.removeNode(4), std::invalid_argument);
}

TEST_CASE("degree, edges and degree sequence stay consistent") {
    DynamicGraph g;
    g.addEdge(1, 2);
    g.addEdge(1, 3);
    g.addEdge(1, 4);
    g.addEdge(2, 3);

    CHECK(g.degree(1) == 3);
    CHECK(g.degree(4) == 1);

    auto es = g.edges();
    CHECK(es.size() == 4);
    for (const auto& e : es) CHECK(e.u < e.v);

    auto degs = g.degreeSequence();
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<std::uint64_t>{1, 2, 2, 3});

    g.removeEdge(1, 2);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
    CHECK(g.numEdges() == 3);
}

TEST_CASE("graphs compare equal on identical node, edge and weight sets") {
    DynamicGraph a;
    DynamicGraph b;
    a.addEdge(1, 2, 2.0);
    a.addNode(5);
    b.addNode(5);
    b.addEdge(2, 1, 2.0);
    CHECK(a == b);

    b.addEdge(1, 2, 3.0); // weight differs now
    CHECK_FALSE(a == b);
}
