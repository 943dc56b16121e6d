#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nhc/graph.hpp"

namespace nhc {

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

/**
 * Reference hub-table state computed from scratch, used to cross-check the
 * incremental engine and to back the stream verifier.
 *
 * For every node: dist is the shortest weighted distance to the nearest hub,
 * and table holds one (hub, parent) -> alpha entry per shortest-path
 * predecessor and per hub that predecessor reaches at its own distance.
 * A node's outgoing weight per hub is its table's alpha normalized by the
 * table total, accumulated over the shortest-path DAG from the hubs.
 */
struct BatchNodeState {
    double dist = kInfiniteDistance;
    // (hub, parent) -> alpha. Hubs hold {(self, nullopt) -> 1}.
    std::map<std::pair<NodeId, std::optional<NodeId>>, double> table;
};

using BatchState = std::unordered_map<NodeId, BatchNodeState>;

/**
 * Multi-source shortest-path recomputation from the given hub set.
 *
 * Implemented directly from the shortest-path definition (Dijkstra over all
 * hubs at distance 0, then alpha accumulation in ascending distance order);
 * shares no state or code with the message-passing engine.
 */
BatchState batchRecompute(const DynamicGraph& g, const std::unordered_set<NodeId>& hubs);

} // namespace nhc
