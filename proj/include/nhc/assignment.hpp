#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>

#include "nhc/graph.hpp"

namespace nhc {

/// Cluster label. Hub-derived labels are node ids; kUnassigned marks nodes
/// without a reachable hub.
using Label = std::int64_t;

inline constexpr Label kUnassigned = -1;

/// Crisp node -> label map.
struct Partition {
    std::unordered_map<NodeId, Label> labels;

    bool operator==(const Partition& other) const { return labels == other.labels; }
};

/// Fuzzy node -> (label -> membership) map; memberships per node sum to 1
/// for reachable nodes. Ordered per node for stable output.
struct Cover {
    std::unordered_map<NodeId, std::map<Label, double>> memberships;
};

} // namespace nhc
