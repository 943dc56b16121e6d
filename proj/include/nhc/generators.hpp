#pragma once

#include <cstdint>
#include <vector>

#include "nhc/graph.hpp"

namespace nhc {

/// Parameters for the clustered power-law growth model: n nodes total, m
/// attachments per arriving node, triangle-closure probability p.
struct HolmeKimParams {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/**
 * Grows a clustered power-law graph: m edgeless seed nodes (ids 1..m), then
 * each arriving node attaches to m distinct existing nodes. The first
 * attachment of a node is always preferential (degree-proportional); each
 * later one is, with probability p, a triangle step to a random unconnected
 * neighbor of the previous preferential target, falling back to a
 * preferential step when that neighborhood is exhausted.
 *
 * The result always has exactly (n - m) * m edges, every non-seed node has
 * degree >= m, and a fixed seed reproduces the graph bit for bit.
 *
 * Throws std::invalid_argument unless 1 <= m < n and 0 <= p <= 1.
 */
DynamicGraph holmeKim(const HolmeKimParams& params);

struct MutationEvent {
    enum class Kind { AddEdge, RemoveEdge };
    Kind kind = Kind::AddEdge;
    NodeId u = 0;
    NodeId v = 0;

    bool operator==(const MutationEvent& other) const {
        return kind == other.kind && u == other.u && v == other.v;
    }
};

/// Edge mutation sequence in which every event is valid at its position:
/// additions target absent pairs, removals target present edges.
struct MutationScript {
    std::vector<MutationEvent> events;
    std::uint64_t seed = 0;
};

/**
 * Samples nAdd edge additions (uniform over the pairs absent at that point)
 * followed by nRemove removals (uniform over the edges present at that
 * point, added edges included). Endpoints are normalized u < v.
 *
 * Throws std::invalid_argument when the graph cannot absorb nAdd new edges
 * or cannot supply nRemove removals.
 */
MutationScript randomScript(const DynamicGraph& g, std::uint64_t nAdd, std::uint64_t nRemove,
                            std::uint64_t seed);

/// Applies one event to the graph. Throws std::invalid_argument when the
/// event is invalid for the graph's current state.
void applyEvent(DynamicGraph& g, const MutationEvent& e);

} // namespace nhc
