#include "nhc/graph.hpp"

#include <algorithm>
#include <string>

namespace nhc {

void DynamicGraph::addNode(NodeId u) {
    adjacency_.try_emplace(u);
}

bool DynamicGraph::addEdge(NodeId u, NodeId v, double w) {
    if (u == v) {
        throw std::invalid_argument("self-loop rejected: node " + std::to_string(u));
    }
    if (!(w > 0.0)) {
        throw std::invalid_argument("edge weight must be positive, got " + std::to_string(w));
    }
    auto& adjU = adjacency_[u];
    auto& adjV = adjacency_[v];
    auto [itU, inserted] = adjU.insert_or_assign(v, w);
    adjV.insert_or_assign(u, w);
    if (inserted) {
        ++edgeCount_;
    }
    return inserted;
}

void DynamicGraph::removeEdge(NodeId u, NodeId v) {
    auto itU = adjacency_.find(u);
    auto itV = adjacency_.find(v);
    if (itU == adjacency_.end() || itV == adjacency_.end() || itU->second.find(v) == itU->second.end()) {
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") does not exist");
    }
    itU->second.erase(v);
    itV->second.erase(u);
    --edgeCount_;
}

std::vector<WeightedEdge> DynamicGraph::removeNode(NodeId u) {
    auto it = adjacency_.find(u);
    if (it == adjacency_.end()) {
        throw std::invalid_argument("node " + std::to_string(u) + " does not exist");
    }
    std::vector<WeightedEdge> removed;
    removed.reserve(it->second.size());
    for (const auto& [nbr, w] : it->second) {
        removed.push_back({u, nbr, w});
        adjacency_[nbr].erase(u);
        --edgeCount_;
    }
    adjacency_.erase(it);
    return removed;
}

bool DynamicGraph::hasEdge(NodeId u, NodeId v) const {
    auto it = adjacency_.find(u);
    return it != adjacency_.end() && it->second.find(v) != it->second.end();
}

double DynamicGraph::edgeWeight(NodeId u, NodeId v) const {
    const auto& adj = adjacencyOf(u);
    auto it = adj.find(v);
    if (it == adj.end()) {
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") does not exist");
    }
    return it->second;
}

std::uint64_t DynamicGraph::degree(NodeId u) const {
    return adjacencyOf(u).size();
}

const std::unordered_map<NodeId, double>& DynamicGraph::neighbors(NodeId u) const {
    return adjacencyOf(u);
}

std::vector<NodeId> DynamicGraph::nodes() const {
    std::vector<NodeId> result;
    result.reserve(adjacency_.size());
    for (const auto& [u, _] : adjacency_) {
        result.push_back(u);
    }
    return result;
}

std::vector<WeightedEdge> DynamicGraph::edges() const {
    std::vector<WeightedEdge> result;
    result.reserve(edgeCount_);
    for (const auto& [u, adj] : adjacency_) {
        for (const auto& [v, w] : adj) {
            if (u < v) {
                result.push_back({u, v, w});
            }
        }
    }
    return result;
}

std::vector<std::uint64_t> DynamicGraph::degreeSequence() const {
    std::vector<std::uint64_t> result;
    result.reserve(adjacency_.size());
    for (const auto& [_, adj] : adjacency_) {
        result.push_back(adj.size());
    }
    return result;
}

bool DynamicGraph::operator==(const DynamicGraph& other) const {
    return edgeCount_ == other.edgeCount_ && adjacency_ == other.adjacency_;
}

const std::unordered_map<NodeId, double>& DynamicGraph::adjacencyOf(NodeId u) const {
    auto it = adjacency_.find(u);
    if (it == adjacency_.end()) {
        throw std::invalid_argument("node " + std::to_string(u) + " does not exist");
    }
    return it->second;
}

} // namespace nhc
