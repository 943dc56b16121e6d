#include "nhc/batch.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace nhc {

namespace {

// Same distance tolerance the incremental side uses, restated here so the
// two implementations stay independent.
bool sameDistance(double a, double b) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    if (a == b) return true;
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= 1e-9 * scale;
}

} // namespace

BatchState batchRecompute(const DynamicGraph& g, const std::unordered_set<NodeId>& hubs) {
    BatchState state;
    state.reserve(g.numNodes());
    for (NodeId u : g.nodes()) {
        state.try_emplace(u);
    }

    // Multi-source Dijkstra.
    using QueueEntry = std::pair<double, NodeId>;
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;
    for (NodeId h : hubs) {
        if (!g.hasNode(h)) {
            continue;
        }
        state[h].dist = 0.0;
        queue.push({0.0, h});
    }
    while (!queue.empty()) {
        auto [d, u] = queue.top();
        queue.pop();
        if (d > state[u].dist) {
            continue;
        }
        for (const auto& [v, w] : g.neighbors(u)) {
            const double candidate = d + w;
            if (candidate < state[v].dist) {
                state[v].dist = candidate;
                queue.push({candidate, v});
            }
        }
    }

    // Alpha accumulation over the shortest-path DAG, parents before children.
    std::vector<NodeId> order;
    order.reserve(state.size());
    for (const auto& [u, s] : state) {
        if (s.dist < kInfiniteDistance) {
            order.push_back(u);
        }
    }
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (state[a].dist != state[b].dist) {
            return state[a].dist < state[b].dist;
        }
        return a < b;
    });

    for (NodeId u : order) {
        BatchNodeState& su = state[u];
        if (hubs.count(u) != 0) {
            su.table[{u, std::nullopt}] = 1.0;
            continue;
        }
        for (const auto& [p, w] : g.neighbors(u)) {
            const BatchNodeState& sp = state.at(p);
            if (!sameDistance(sp.dist + w, su.dist)) {
                continue;
            }
            double total = 0.0;
            for (const auto& [key, alpha] : sp.table) {
                total += alpha;
            }
            // Per-hub weight the predecessor forwards: its alpha share.
            std::map<NodeId, double> byHub;
            for (const auto& [key, alpha] : sp.table) {
                byHub[key.first] += alpha;
            }
            for (const auto& [hub, mass] : byHub) {
                su.table[{hub, p}] = mass / total;
            }
        }
    }
    return state;
}

} // namespace nhc
