#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nhc/assignment.hpp"
#include "nhc/batch.hpp"
#include "nhc/graph.hpp"
#include "nhc/hub_policy.hpp"

namespace nhc {

/// One entry of a node's hub information table: the hub, the neighbor the
/// shortest path runs through (empty only for a hub's own entry), and the
/// accumulated weight of that route.
struct HubTuple {
    NodeId hub;
    std::optional<NodeId> parent;
    double alpha;

    bool operator==(const HubTuple& other) const {
        return hub == other.hub && parent == other.parent && alpha == other.alpha;
    }
};

/// Per-node clustering state: the hub distance and the table of routes
/// realized at exactly that distance. dist is infinite iff the table is empty.
struct NodeState {
    double dist = kInfiniteDistance;
    std::vector<HubTuple> table; // sorted by (hub, parent)
};

/// Directed carrier of a node's normalized hub table. payload holds one
/// (hub, alpha share) entry per hub, shares summing to 1 when non-empty;
/// dist is the candidate distance at the target (sender dist + edge weight),
/// infinite for invalidation notices.
struct Message {
    NodeId source;
    NodeId target;
    std::vector<std::pair<NodeId, double>> payload; // sorted by hub
    double dist;
};

struct EventStats {
    std::uint64_t messagesProcessed = 0;
};

/// Queue order for pending messages. DistanceOrdered pops the lowest
/// candidate distance first (breadth-first around the hubs); Fifo pops in
/// insertion order and exists to measure what the ordering saves.
enum class QueueDiscipline { DistanceOrdered, Fifo };

/// Thrown when one stabilization exceeds its processing budget; carries the
/// counters needed to diagnose the runaway.
class StabilizationOverflow : public std::runtime_error {
public:
    StabilizationOverflow(std::uint64_t processed, std::uint64_t pending);

    std::uint64_t processed;
    std::uint64_t pending;
};

/**
 * Incremental nearest-hub clustering engine.
 *
 * The engine reads (never mutates) a graph owned by the caller. Mutations are
 * applied to the graph first and then reported through the on* handlers, each
 * of which drains the message queue before returning. Hub promotion and
 * demotion are explicit calls; the engine never changes the hub set on its
 * own. One logical actor: no concurrent mutation.
 */
class Engine {
public:
    /**
     * Seeds every node of g, marking the given nodes as hubs, and queues the
     * initial hub broadcasts without draining them. Call stabilize() to reach
     * a consistent state (or use initializeEngine()).
     */
    Engine(const DynamicGraph& g, const std::vector<NodeId>& hubs,
           QueueDiscipline discipline = QueueDiscipline::DistanceOrdered);

    /// Handles a single queued or externally constructed message. May enqueue
    /// follow-up messages; does not drain the queue.
    void processMessage(const Message& m);

    /// Notifies the engine of an edge already added to the graph.
    EventStats onEdgeAdded(NodeId u, NodeId v);

    /// Notifies the engine of an edge weight change already applied to the graph.
    EventStats onEdgeWeightChanged(NodeId u, NodeId v);

    /// Notifies the engine of an edge already removed from the graph.
    EventStats onEdgeRemoved(NodeId u, NodeId v);

    /// Notifies the engine of a node already removed from the graph, with the
    /// edges that went down with it.
    EventStats onNodeRemoved(NodeId u, const std::vector<WeightedEdge>& removedEdges);

    /// Makes u a hub (distance 0, own table entry) and propagates. Throws if
    /// u is already a hub.
    EventStats promoteHub(NodeId u);

    /// Revokes u's hub state and propagates the loss; neighbors then offer
    /// alternative routes. Throws if u is not a hub.
    EventStats demoteHub(NodeId u);

    /// Drains the message queue until no rule changes any state. Throws
    /// StabilizationOverflow past 64 * |edges| processed messages.
    EventStats stabilize();

    const NodeState& state(NodeId u) const;
    const std::unordered_set<NodeId>& hubs() const { return hubs_; }
    bool isHubNode(NodeId u) const { return hubs_.find(u) != hubs_.end(); }
    std::uint64_t pendingMessages() const { return slots_.size(); }
    const DynamicGraph& graph() const { return *graph_; }

    /// Crisp labels: the hub with the largest alpha sum, smallest hub id on
    /// ties; unreachable nodes get kUnassigned. Requires a drained queue.
    Partition crispAssignment() const;

    /// Membership degrees: per-hub alpha sums normalized to 1. Requires a
    /// drained queue.
    Cover fuzzyAssignment() const;

private:
    struct DirectedEdge {
        NodeId from;
        NodeId to;
        bool operator==(const DirectedEdge& other) const {
            return from == other.from && to == other.to;
        }
    };
    struct DirectedEdgeHash {
        std::size_t operator()(const DirectedEdge& e) const {
            std::uint64_t h = e.from * 0x9e3779b97f4a7c15ULL;
            h ^= e.to + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };
    struct Slot {
        std::vector<std::pair<NodeId, double>> payload;
        double dist;
        std::uint64_t epoch;
    };
    struct HeapEntry {
        double dist;
        NodeId from;
        NodeId to;
        std::uint64_t epoch;
    };
    struct HeapCompare {
        QueueDiscipline discipline;
        bool operator()(const HeapEntry& a, const HeapEntry& b) const;
    };

    void requireDrained(const char* what) const;
    std::vector<std::pair<NodeId, double>> normalizedPayload(const NodeState& s) const;
    void enqueueMessage(NodeId from, NodeId to);
    /// Queues u's current state to every neighbor, superseding pending offers.
    void broadcastState(NodeId u);
    /// Removes tuples routed through `parent` from s. Returns true if any
    /// were removed; resets dist when the table empties.
    static bool dropRoutesThrough(NodeState& s, NodeId parent);
    void handleMessage(const Message& m);
    void purgeSlots(NodeId u, NodeId v);

    const DynamicGraph* graph_;
    std::unordered_set<NodeId> hubs_;
    std::unordered_map<NodeId, NodeState> states_;
    std::unordered_map<DirectedEdge, Slot, DirectedEdgeHash> slots_;
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapCompare> heap_;
    std::uint64_t epochCounter_ = 0;
};

/// Distance comparison with the engine's tolerance: exact for infinities and
/// integer-valued sums, 1e-9 relative otherwise.
bool distanceEqual(double a, double b);

/// Seeds hubs per the resolved policy over g's degrees and stabilizes.
Engine initializeEngine(const DynamicGraph& g, const ResolvedHubPolicy& policy,
                        QueueDiscipline discipline = QueueDiscipline::DistanceOrdered);

/// True when the engine's state matches a batch recomputation: equal dist and
/// (hub, parent) sets everywhere, alphas within tolerance. On mismatch a
/// description of the first difference is written to *diff if given.
bool statesMatch(const Engine& engine, const BatchState& batch, double alphaTol = 1e-9,
                 std::string* diff = nullptr);

} // namespace nhc
