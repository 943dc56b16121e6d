#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace nhc {

using NodeId = std::uint64_t;

struct WeightedEdge {
    NodeId u;
    NodeId v;
    double weight;
};

/**
 * Mutable undirected weighted graph with caller-supplied stable node ids.
 *
 * Adjacency is kept symmetric, self-loops and parallel edges are rejected,
 * weights are strictly positive. Single writer; reads may be concurrent
 * between mutations.
 */
class DynamicGraph {
public:
    /// Adds an isolated node. No-op if the node already exists.
    void addNode(NodeId u);

    /// True if the node exists.
    bool hasNode(NodeId u) const { return adjacency_.find(u) != adjacency_.end(); }

    /**
     * Adds an undirected edge with weight w (default 1.0). Missing endpoints
     * are created. Re-adding an existing edge updates its weight.
     *
     * @return true if the edge was new, false if only the weight changed.
     */
    bool addEdge(NodeId u, NodeId v, double w = 1.0);

    /// Removes an existing edge. Throws if the edge is absent.
    void removeEdge(NodeId u, NodeId v);

    /**
     * Removes a node and all incident edges.
     *
     * @return the removed edges, so callers can process each removal.
     */
    std::vector<WeightedEdge> removeNode(NodeId u);

    bool hasEdge(NodeId u, NodeId v) const;

    /// Weight of an existing edge. Throws if the edge is absent.
    double edgeWeight(NodeId u, NodeId v) const;

    /// Degree of an existing node (number of incident edges).
    std::uint64_t degree(NodeId u) const;

    /// Neighbors of an existing node with edge weights, in unspecified order.
    const std::unordered_map<NodeId, double>& neighbors(NodeId u) const;

    std::uint64_t numNodes() const { return adjacency_.size(); }
    std::uint64_t numEdges() const { return edgeCount_; }

    /// All node ids, in unspecified order.
    std::vector<NodeId> nodes() const;

    /// All edges with u < v, in unspecified order.
    std::vector<WeightedEdge> edges() const;

    /// All node degrees, in unspecified order.
    std::vector<std::uint64_t> degreeSequence() const;

    bool operator==(const DynamicGraph& other) const;

private:
    const std::unordered_map<NodeId, double>& adjacencyOf(NodeId u) const;

    std::unordered_map<NodeId, std::unordered_map<NodeId, double>> adjacency_;
    std::uint64_t edgeCount_ = 0;
};

} // namespace nhc
