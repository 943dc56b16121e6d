#include "nhc/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

namespace nhc {

namespace {

constexpr double kDistTol = 1e-9;

bool tupleOrder(const HubTuple& a, const HubTuple& b) {
    if (a.hub != b.hub) return a.hub < b.hub;
    return a.parent < b.parent;
}

} // namespace

bool distanceEqual(double a, double b) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    if (a == b) return true;
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= kDistTol * scale;
}

StabilizationOverflow::StabilizationOverflow(std::uint64_t processedIn, std::uint64_t pendingIn)
    : std::runtime_error("stabilization exceeded its processing budget: " +
                         std::to_string(processedIn) + " messages handled, " +
                         std::to_string(pendingIn) + " still pending"),
      processed(processedIn),
      pending(pendingIn) {}

bool Engine::HeapCompare::operator()(const HeapEntry& a, const HeapEntry& b) const {
    // Retractions (infinite distance) preempt every offer under either
    // discipline. An invalidation wave must finish wiping dead routes before
    // rebuilding starts, or stale offers resurrect them and the distances
    // count upward without bound.
    const bool aPoison = std::isinf(a.dist);
    const bool bPoison = std::isinf(b.dist);
    if (aPoison != bPoison) return bPoison;
    if (discipline == QueueDiscipline::Fifo) return a.epoch > b.epoch;
    if (a.dist != b.dist) return a.dist > b.dist;
    if (a.from != b.from) return a.from > b.from;
    if (a.to != b.to) return a.to > b.to;
    return a.epoch > b.epoch;
}

Engine::Engine(const DynamicGraph& g, const std::vector<NodeId>& hubs,
               QueueDiscipline discipline)
    : graph_(&g), heap_(HeapCompare{discipline}) {
    for (NodeId u : g.nodes()) states_.emplace(u, NodeState{});
    std::vector<NodeId> seeded;
    seeded.reserve(hubs.size());
    for (NodeId h : hubs) {
        if (!g.hasNode(h)) {
            throw std::invalid_argument("hub node " + std::to_string(h) + " is not in the graph");
        }
        if (!hubs_.insert(h).second) continue;
        NodeState& s = states_.at(h);
        s.dist = 0.0;
        s.table = {HubTuple{h, std::nullopt, 1.0}};
        seeded.push_back(h);
    }
    for (NodeId h : seeded) broadcastState(h);
}

std::vector<std::pair<NodeId, double>> Engine::normalizedPayload(const NodeState& s) const {
    std::vector<std::pair<NodeId, double>> out;
    if (s.table.empty()) return out;
    double total = 0.0;
    for (const HubTuple& t : s.table) total += t.alpha;
    // The table is sorted by hub, so equal hubs form runs.
    for (const HubTuple& t : s.table) {
        if (!out.empty() && out.back().first == t.hub) {
            out.back().second += t.alpha;
        } else {
            out.emplace_back(t.hub, t.alpha);
        }
    }
    for (auto& entry : out) entry.second /= total;
    return out;
}

void Engine::enqueueMessage(NodeId from, NodeId to) {
    const NodeState& s = states_.at(from);
    Slot slot;
    slot.dist = s.dist + graph_->edgeWeight(from, to);
    slot.payload = normalizedPayload(s);
    slot.epoch = ++epochCounter_;
    heap_.push(HeapEntry{slot.dist, from, to, slot.epoch});
    slots_[DirectedEdge{from, to}] = std::move(slot);
}

void Engine::broadcastState(NodeId u) {
    if (!graph_->hasNode(u)) return;
    std::vector<NodeId> targets;
    targets.reserve(graph_->neighbors(u).size());
    for (const auto& [v, w] : graph_->neighbors(u)) targets.push_back(v);
    std::sort(targets.begin(), targets.end());
    // Every neighbor hears about the change, including the one whose message
    // caused it: that neighbor may hold routes booked at this node's previous
    // distance, and nothing else would ever retract them. Two nodes whose
    // stale bookings point at each other otherwise keep a vanished route
    // alive forever.
    for (NodeId v : targets) enqueueMessage(u, v);
}

bool Engine::dropRoutesThrough(NodeState& s, NodeId parent) {
    const std::size_t before = s.table.size();
    s.table.erase(std::remove_if(s.table.begin(), s.table.end(),
                                 [parent](const HubTuple& t) {
                                     return t.parent == std::optional<NodeId>(parent);
                                 }),
                  s.table.end());
    if (s.table.size() == before) return false;
    if (s.table.empty()) s.dist = kInfiniteDistance;
    return true;
}

void Engine::handleMessage(const Message& m) {
    if (!graph_->hasEdge(m.source, m.target)) return;
    NodeState& s = states_.try_emplace(m.target).first->second;
    const double w = graph_->edgeWeight(m.source, m.target);
    bool changed = false;

    // A worse offer than before retracts every route booked through the
    // sender: those were valid only at its previous distance.
    if (!distanceEqual(m.dist, s.dist) && m.dist > s.dist) {
        changed = dropRoutesThrough(s, m.source);
    }

    if (!distanceEqual(m.dist, s.dist) && m.dist < s.dist) {
        // Strictly better offer: adopt the sender's view wholesale.
        s.dist = m.dist;
        s.table.clear();
        s.table.reserve(m.payload.size());
        for (const auto& [hub, share] : m.payload) {
            s.table.push_back(HubTuple{hub, m.source, share});
        }
        changed = true;
    } else if (distanceEqual(m.dist, s.dist)) {
        // Equally good offer: the sender's routes replace whatever was booked
        // through it. Both sides unreachable means there is nothing to book.
        if (s.dist != kInfiniteDistance) {
            std::vector<HubTuple> merged;
            merged.reserve(s.table.size() + m.payload.size());
            for (const HubTuple& t : s.table) {
                if (t.parent != std::optional<NodeId>(m.source)) merged.push_back(t);
            }
            for (const auto& [hub, share] : m.payload) {
                merged.push_back(HubTuple{hub, m.source, share});
            }
            std::sort(merged.begin(), merged.end(), tupleOrder);
            if (merged != s.table) {
                s.table = std::move(merged);
                changed = true;
            }
        }
    } else if (m.dist > s.dist + w || distanceEqual(m.dist, s.dist + w)) {
        // The sender lags behind this node. Replying with our table (an offer
        // of s.dist + w at the sender) only helps when it beats or matches the
        // sender's own distance of m.dist - w; otherwise the reply would just
        // bounce back and forth between neighbors at equal distance.
        if (m.dist > s.dist + 2.0 * w || distanceEqual(m.dist, s.dist + 2.0 * w)) {
            enqueueMessage(m.target, m.source);
        }
    }
    // Remaining band (s.dist < m.dist < s.dist + w): the sender is worse off
    // but cannot be helped from here; drop.

    if (changed) broadcastState(m.target);
}

void Engine::processMessage(const Message& m) { handleMessage(m); }

EventStats Engine::stabilize() {
    EventStats stats;
    const std::uint64_t cap = 64 * std::max<std::uint64_t>(graph_->numEdges(), 1);
    while (!heap_.empty()) {
        const HeapEntry e = heap_.top();
        heap_.pop();
        auto it = slots_.find(DirectedEdge{e.from, e.to});
        if (it == slots_.end() || it->second.epoch != e.epoch) continue; // superseded
        Message m{e.from, e.to, std::move(it->second.payload), it->second.dist};
        slots_.erase(it);
        if (stats.messagesProcessed >= cap) {
            throw StabilizationOverflow(stats.messagesProcessed, slots_.size() + 1);
        }
        handleMessage(m);
        ++stats.messagesProcessed;
    }
    return stats;
}

EventStats Engine::onEdgeAdded(NodeId u, NodeId v) {
    if (!graph_->hasEdge(u, v)) {
        throw std::invalid_argument("onEdgeAdded: edge is not in the graph; add it first");
    }
    states_.try_emplace(u);
    states_.try_emplace(v);
    enqueueMessage(u, v);
    enqueueMessage(v, u);
    return stabilize();
}

EventStats Engine::onEdgeWeightChanged(NodeId u, NodeId v) {
    if (!graph_->hasEdge(u, v)) {
        throw std::invalid_argument("onEdgeWeightChanged: edge is not in the graph");
    }
    // Routes booked across this edge assumed the old weight; retract them and
    // let the mutual offers rebuild whatever is still valid.
    if (dropRoutesThrough(states_.at(u), v)) broadcastState(u);
    if (dropRoutesThrough(states_.at(v), u)) broadcastState(v);
    enqueueMessage(u, v);
    enqueueMessage(v, u);
    return stabilize();
}

EventStats Engine::onEdgeRemoved(NodeId u, NodeId v) {
    if (graph_->hasEdge(u, v)) {
        throw std::invalid_argument("onEdgeRemoved: edge is still in the graph; remove it first");
    }
    purgeSlots(u, v);
    const bool changedU = states_.count(u) != 0 && dropRoutesThrough(states_.at(u), v);
    const bool changedV = states_.count(v) != 0 && dropRoutesThrough(states_.at(v), u);
    if (changedU) broadcastState(u);
    if (changedV) broadcastState(v);
    return stabilize();
}

EventStats Engine::onNodeRemoved(NodeId u, const std::vector<WeightedEdge>& removedEdges) {
    if (graph_->hasNode(u)) {
        throw std::invalid_argument("onNodeRemoved: node is still in the graph; remove it first");
    }
    hubs_.erase(u);
    states_.erase(u);
    std::vector<NodeId> changed;
    for (const WeightedEdge& e : removedEdges) {
        const NodeId other = e.u == u ? e.v : e.u;
        purgeSlots(u, other);
        auto it = states_.find(other);
        if (it != states_.end() && dropRoutesThrough(it->second, u)) changed.push_back(other);
    }
    std::sort(changed.begin(), changed.end());
    for (NodeId x : changed) broadcastState(x);
    return stabilize();
}

EventStats Engine::promoteHub(NodeId u) {
    if (!graph_->hasNode(u)) {
        throw std::invalid_argument("promoteHub: node " + std::to_string(u) + " is not in the graph");
    }
    if (!hubs_.insert(u).second) {
        throw std::logic_error("promoteHub: node " + std::to_string(u) + " is already a hub");
    }
    NodeState& s = states_.try_emplace(u).first->second;
    s.dist = 0.0;
    s.table = {HubTuple{u, std::nullopt, 1.0}};
    broadcastState(u);
    return stabilize();
}

EventStats Engine::demoteHub(NodeId u) {
    if (hubs_.erase(u) == 0) {
        throw std::logic_error("demoteHub: node " + std::to_string(u) + " is not a hub");
    }
    NodeState& s = states_.at(u);
    s.dist = kInfiniteDistance;
    s.table.clear();
    // Unreachable until some neighbor answers with an alternative route.
    broadcastState(u);
    return stabilize();
}

const NodeState& Engine::state(NodeId u) const {
    static const NodeState kEmpty;
    auto it = states_.find(u);
    return it == states_.end() ? kEmpty : it->second;
}

void Engine::requireDrained(const char* what) const {
    if (!slots_.empty()) {
        throw std::logic_error(std::string(what) +
                               ": message queue is not drained; call stabilize() first");
    }
}

Partition Engine::crispAssignment() const {
    requireDrained("crispAssignment");
    Partition p;
    p.labels.reserve(graph_->numNodes());
    for (NodeId u : graph_->nodes()) {
        auto it = states_.find(u);
        if (it == states_.end() || it->second.table.empty()) {
            p.labels[u] = kUnassigned;
            continue;
        }
        const std::vector<HubTuple>& tbl = it->second.table;
        NodeId bestHub = 0;
        double bestMass = -1.0;
        std::size_t i = 0;
        while (i < tbl.size()) {
            const NodeId hub = tbl[i].hub;
            double mass = 0.0;
            for (; i < tbl.size() && tbl[i].hub == hub; ++i) mass += tbl[i].alpha;
            // Hubs come in ascending order, so a strict comparison resolves
            // ties toward the smallest hub id.
            if (mass > bestMass) {
                bestMass = mass;
                bestHub = hub;
            }
        }
        p.labels[u] = static_cast<Label>(bestHub);
    }
    return p;
}

Cover Engine::fuzzyAssignment() const {
    requireDrained("fuzzyAssignment");
    Cover c;
    for (NodeId u : graph_->nodes()) {
        std::map<Label, double>& mu = c.memberships[u];
        auto it = states_.find(u);
        if (it == states_.end() || it->second.table.empty()) continue;
        const std::vector<HubTuple>& tbl = it->second.table;
        double total = 0.0;
        for (const HubTuple& t : tbl) total += t.alpha;
        std::size_t i = 0;
        while (i < tbl.size()) {
            const NodeId hub = tbl[i].hub;
            double mass = 0.0;
            for (; i < tbl.size() && tbl[i].hub == hub; ++i) mass += tbl[i].alpha;
            mu[static_cast<Label>(hub)] = mass / total;
        }
    }
    return c;
}

void Engine::purgeSlots(NodeId u, NodeId v) {
    slots_.erase(DirectedEdge{u, v});
    slots_.erase(DirectedEdge{v, u});
}

Engine initializeEngine(const DynamicGraph& g, const ResolvedHubPolicy& policy,
                        QueueDiscipline discipline) {
    std::vector<NodeId> hubs;
    for (NodeId u : g.nodes()) {
        if (policy.isHub(g.degree(u))) hubs.push_back(u);
    }
    std::sort(hubs.begin(), hubs.end());
    Engine engine(g, hubs, discipline);
    engine.stabilize();
    return engine;
}

bool statesMatch(const Engine& engine, const BatchState& batch, double alphaTol,
                 std::string* diff) {
    auto fail = [diff](const std::string& why) {
        if (diff) *diff = why;
        return false;
    };
    for (NodeId u : engine.graph().nodes()) {
        const NodeState& es = engine.state(u);
        static const BatchNodeState kEmptyBatch;
        auto bit = batch.find(u);
        const BatchNodeState& bs = bit == batch.end() ? kEmptyBatch : bit->second;
        if (!distanceEqual(es.dist, bs.dist)) {
            return fail("node " + std::to_string(u) + ": dist " + std::to_string(es.dist) +
                        " vs batch " + std::to_string(bs.dist));
        }
        if (es.table.size() != bs.table.size()) {
            return fail("node " + std::to_string(u) + ": table size " +
                        std::to_string(es.table.size()) + " vs batch " +
                        std::to_string(bs.table.size()));
        }
        std::size_t i = 0;
        for (const auto& [key, alpha] : bs.table) {
            const HubTuple& t = es.table[i++];
            if (t.hub != key.first || t.parent != key.second) {
                return fail("node " + std::to_string(u) + ": tuple sets differ (first at hub " +
                            std::to_string(t.hub) + ")");
            }
            if (std::fabs(t.alpha - alpha) > alphaTol) {
                return fail("node " + std::to_string(u) + ", hub " + std::to_string(key.first) +
                            ": alpha " + std::to_string(t.alpha) + " vs batch " +
                            std::to_string(alpha));
            }
        }
    }
    return true;
}

} // namespace nhc
