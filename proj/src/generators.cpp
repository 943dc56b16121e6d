#include "nhc/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nhc {

DynamicGraph holmeKim(const HolmeKimParams& params) {
    if (params.m < 1 || params.m >= params.n) {
        throw std::invalid_argument("attachment count must satisfy 1 <= m < n");
    }
    if (!(params.p >= 0.0 && params.p <= 1.0)) {
        throw std::invalid_argument("triangle probability must lie in [0, 1]");
    }

    DynamicGraph g;
    for (NodeId u = 1; u <= params.m; ++u) g.addNode(u);

    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    // Attachment targets are drawn from a node pool holding each node once
    // per incident edge, which makes a uniform draw degree-proportional. The
    // edgeless seed nodes start with one entry each so the first arrival can
    // attach at all; it necessarily absorbs all m of them.
    std::vector<NodeId> pool;
    pool.reserve(2 * params.n * params.m);
    for (NodeId u = 1; u <= params.m; ++u) pool.push_back(u);

    for (NodeId source = params.m + 1; source <= params.n; ++source) {
        g.addNode(source);
        NodeId lastTarget = 0;

        auto preferentialStep = [&]() {
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            while (true) {
                const NodeId target = pool[pick(rng)];
                if (target == source || g.hasEdge(source, target)) continue;
                g.addEdge(source, target);
                pool.push_back(target);
                lastTarget = target;
                return;
            }
        };

        preferentialStep();
        for (std::uint64_t step = 1; step < params.m; ++step) {
            if (coin(rng) < params.p) {
                std::vector<NodeId> candidates;
                for (const auto& [w, weight] : g.neighbors(lastTarget)) {
                    if (w != source && !g.hasEdge(source, w)) candidates.push_back(w);
                }
                if (!candidates.empty()) {
                    std::sort(candidates.begin(), candidates.end());
                    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
                    const NodeId w = candidates[pick(rng)];
                    g.addEdge(source, w);
                    pool.push_back(w);
                    continue;
                }
            }
            preferentialStep();
        }
        pool.insert(pool.end(), params.m, source);
    }
    return g;
}

MutationScript randomScript(const DynamicGraph& g, std::uint64_t nAdd, std::uint64_t nRemove,
                            std::uint64_t seed) {
    std::vector<NodeId> nodes = g.nodes();
    std::sort(nodes.begin(), nodes.end());
    const std::uint64_t n = nodes.size();
    const std::uint64_t pairs = n * (n - 1) / 2;
    if (nAdd > pairs - g.numEdges()) {
        throw std::invalid_argument("graph cannot absorb " + std::to_string(nAdd) +
                                    " new edges: only " + std::to_string(pairs - g.numEdges()) +
                                    " node pairs are absent");
    }
    if (nRemove > g.numEdges() + nAdd) {
        throw std::invalid_argument("graph cannot supply " + std::to_string(nRemove) +
                                    " removals: only " + std::to_string(g.numEdges() + nAdd) +
                                    " edges would exist");
    }

    std::mt19937_64 rng(seed);
    MutationScript script;
    script.seed = seed;
    script.events.reserve(nAdd + nRemove);

    DynamicGraph work = g;
    std::uniform_int_distribution<std::size_t> pickNode(0, n - 1);
    for (std::uint64_t i = 0; i < nAdd; ++i) {
        while (true) {
            NodeId u = nodes[pickNode(rng)];
            NodeId v = nodes[pickNode(rng)];
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            if (work.hasEdge(u, v)) continue;
            work.addEdge(u, v);
            script.events.push_back({MutationEvent::Kind::AddEdge, u, v});
            break;
        }
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(work.numEdges());
    for (const WeightedEdge& e : work.edges()) edges.push_back({e.u, e.v});
    std::sort(edges.begin(), edges.end());
    for (std::uint64_t i = 0; i < nRemove; ++i) {
        std::uniform_int_distribution<std::size_t> pickEdge(0, edges.size() - 1);
        const std::size_t at = pickEdge(rng);
        const auto [u, v] = edges[at];
        edges[at] = edges.back();
        edges.pop_back();
        script.events.push_back({MutationEvent::Kind::RemoveEdge, u, v});
    }
    return script;
}

void applyEvent(DynamicGraph& g, const MutationEvent& e) {
    switch (e.kind) {
    case MutationEvent::Kind::AddEdge:
        if (g.hasEdge(e.u, e.v)) {
            throw std::invalid_argument("edge " + std::to_string(e.u) + "-" +
                                        std::to_string(e.v) + " already exists");
        }
        g.addEdge(e.u, e.v);
        return;
    case MutationEvent::Kind::RemoveEdge:
        g.removeEdge(e.u, e.v);
        return;
    }
    throw std::invalid_argument("unknown event kind");
}

} // namespace nhc
