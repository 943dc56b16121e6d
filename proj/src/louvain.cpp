#include "nhc/louvain.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace nhc {

namespace {

/// Aggregated working graph over dense indices. Unlike DynamicGraph it
/// carries self-loops, which hold the internal weight of collapsed
/// communities. Conventions: a self-loop counts once toward total weight and
/// intra-community weight but twice toward its node's strength, which keeps
/// modularity identical across aggregation levels.
struct LevelGraph {
    std::vector<std::vector<std::pair<std::size_t, double>>> adj;
    std::vector<double> selfLoop;
    std::vector<double> strength;
    double totalWeight = 0.0;

    std::size_t size() const { return adj.size(); }
};

double levelModularity(const LevelGraph& lg, const std::vector<std::size_t>& community) {
    std::unordered_map<std::size_t, double> in;
    std::unordered_map<std::size_t, double> tot;
    for (std::size_t u = 0; u < lg.size(); ++u) {
        tot[community[u]] += lg.strength[u];
        in[community[u]] += lg.selfLoop[u];
        for (const auto& [v, w] : lg.adj[u]) {
            if (community[v] == community[u] && u < v) in[community[u]] += w;
        }
    }
    double q = 0.0;
    for (const auto& [c, t] : tot) {
        const double frac = t / (2.0 * lg.totalWeight);
        q += in[c] / lg.totalWeight - frac * frac;
    }
    return q;
}

/// One local-move phase. Returns the community of each node, renumbered
/// 0..k-1 in order of first appearance.
std::vector<std::size_t> oneLevel(const LevelGraph& lg, std::mt19937_64& rng) {
    const std::size_t n = lg.size();
    std::vector<std::size_t> community(n);
    std::iota(community.begin(), community.end(), 0);
    std::vector<double> communityStrength = lg.strength;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    const double m = lg.totalWeight;
    bool moved = true;
    for (int sweep = 0; moved && sweep < 1000; ++sweep) {
        moved = false;
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t u : order) {
            const std::size_t from = community[u];

            // Weight from u to each neighboring community; ordered map makes
            // the tie-break (first strictly better candidate wins) stable.
            std::map<std::size_t, double> linkTo;
            linkTo[from]; // candidate even when u has no edge into it
            for (const auto& [v, w] : lg.adj[u]) linkTo[community[v]] += w;

            communityStrength[from] -= lg.strength[u];

            std::size_t best = from;
            double bestGain = linkTo[from] / m
                              - communityStrength[from] * lg.strength[u] / (2.0 * m * m);
            for (const auto& [c, link] : linkTo) {
                if (c == from) continue;
                const double gain =
                    link / m - communityStrength[c] * lg.strength[u] / (2.0 * m * m);
                if (gain > bestGain) {
                    bestGain = gain;
                    best = c;
                }
            }

            communityStrength[best] += lg.strength[u];
            community[u] = best;
            if (best != from) moved = true;
        }
    }

    std::vector<std::size_t> renumber(n, n);
    std::size_t next = 0;
    for (std::size_t u = 0; u < n; ++u) {
        if (renumber[community[u]] == n) renumber[community[u]] = next++;
        community[u] = renumber[community[u]];
    }
    return community;
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<std::size_t>& community) {
    const std::size_t k = *std::max_element(community.begin(), community.end()) + 1;
    LevelGraph out;
    out.adj.resize(k);
    out.selfLoop.assign(k, 0.0);
    out.strength.assign(k, 0.0);
    out.totalWeight = lg.totalWeight;

    std::vector<std::map<std::size_t, double>> between(k);
    for (std::size_t u = 0; u < lg.size(); ++u) {
        out.selfLoop[community[u]] += lg.selfLoop[u];
        for (const auto& [v, w] : lg.adj[u]) {
            if (u > v) continue;
            if (community[u] == community[v]) {
                out.selfLoop[community[u]] += w;
            } else {
                between[community[u]][community[v]] += w;
                between[community[v]][community[u]] += w;
            }
        }
    }
    for (std::size_t c = 0; c < k; ++c) {
        out.strength[c] = 2.0 * out.selfLoop[c];
        for (const auto& [d, w] : between[c]) {
            out.adj[c].push_back({d, w});
            out.strength[c] += w;
        }
    }
    return out;
}

} // namespace

Dendrogram louvain(const DynamicGraph& g, std::uint64_t seed) {
    if (g.numEdges() == 0) {
        throw std::invalid_argument("clustering needs at least one edge");
    }

    std::vector<NodeId> nodes = g.nodes();
    std::sort(nodes.begin(), nodes.end());
    std::unordered_map<NodeId, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;

    LevelGraph lg;
    lg.adj.resize(nodes.size());
    lg.selfLoop.assign(nodes.size(), 0.0);
    lg.strength.assign(nodes.size(), 0.0);
    for (const WeightedEdge& e : g.edges()) {
        const std::size_t iu = index[e.u];
        const std::size_t iv = index[e.v];
        lg.adj[iu].push_back({iv, e.weight});
        lg.adj[iv].push_back({iu, e.weight});
        lg.strength[iu] += e.weight;
        lg.strength[iv] += e.weight;
        lg.totalWeight += e.weight;
    }
    for (auto& neighbors : lg.adj) std::sort(neighbors.begin(), neighbors.end());

    std::mt19937_64 rng(seed);
    constexpr double kMinGain = 1e-9;

    Dendrogram d;
    std::vector<std::size_t> community = oneLevel(lg, rng);
    double q = levelModularity(lg, community);

    Partition first;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        first.labels[nodes[i]] = static_cast<Label>(community[i]);
    }
    d.levels.push_back(std::move(first));
    lg = aggregate(lg, community);

    while (lg.size() > 1) {
        community = oneLevel(lg, rng);
        const double nextQ = levelModularity(lg, community);
        if (nextQ - q < kMinGain) break;
        q = nextQ;
        Partition level;
        for (std::size_t i = 0; i < lg.size(); ++i) {
            level.labels[static_cast<NodeId>(i)] = static_cast<Label>(community[i]);
        }
        d.levels.push_back(std::move(level));
        lg = aggregate(lg, community);
    }
    return d;
}

Partition flatten(const Dendrogram& d, std::size_t level) {
    if (level >= d.levels.size()) {
        throw std::out_of_range("dendrogram has no level " + std::to_string(level));
    }
    Partition p = d.levels[0];
    for (std::size_t l = 1; l <= level; ++l) {
        for (auto& [node, label] : p.labels) {
            label = d.levels[l].labels.at(static_cast<NodeId>(label));
        }
    }
    return p;
}

} // namespace nhc
