#include "nhc/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace nhc {

namespace {

/// Cluster identity of a node. Unassigned nodes become singleton clusters
/// keyed by their own id; the leading flag keeps those from colliding with
/// any real label value.
using ClusterKey = std::pair<std::int64_t, std::int64_t>;

ClusterKey clusterOf(NodeId u, const Partition& p) {
    auto it = p.labels.find(u);
    if (it == p.labels.end()) {
        throw std::invalid_argument("partition does not cover node " + std::to_string(u));
    }
    if (it->second == kUnassigned) {
        return {1, static_cast<std::int64_t>(u)};
    }
    return {0, it->second};
}

double entropyOf(const std::map<ClusterKey, double>& counts, double n) {
    double h = 0.0;
    for (const auto& [key, c] : counts) {
        if (c > 0.0) h -= (c / n) * std::log(c / n);
    }
    return h;
}

struct Contingency {
    std::map<std::pair<ClusterKey, ClusterKey>, double> joint;
    std::map<ClusterKey, double> predCounts;
    std::map<ClusterKey, double> truthCounts;
    double n = 0.0;
};

Contingency contingencyOf(const Partition& pred, const Partition& truth) {
    if (pred.labels.empty() || truth.labels.empty()) {
        throw std::invalid_argument("cannot score empty partitions");
    }
    if (pred.labels.size() != truth.labels.size()) {
        throw std::invalid_argument("partitions cover different node sets");
    }
    Contingency c;
    for (const auto& [node, label] : pred.labels) {
        if (truth.labels.find(node) == truth.labels.end()) {
            throw std::invalid_argument("partitions cover different node sets");
        }
        const ClusterKey pk = clusterOf(node, pred);
        const ClusterKey tk = clusterOf(node, truth);
        c.joint[{pk, tk}] += 1.0;
        c.predCounts[pk] += 1.0;
        c.truthCounts[tk] += 1.0;
        c.n += 1.0;
    }
    return c;
}

/// Intra- and inter-pair edge fractions share all the counting.
double pairDensity(const DynamicGraph& g, const Partition& p, bool intra, const char* name) {
    std::map<ClusterKey, double> sizes;
    for (NodeId u : g.nodes()) sizes[clusterOf(u, p)] += 1.0;

    const double n = static_cast<double>(g.numNodes());
    double intraPairs = 0.0;
    for (const auto& [key, size] : sizes) intraPairs += size * (size - 1.0) / 2.0;
    const double interPairs = n * (n - 1.0) / 2.0 - intraPairs;

    double intraEdges = 0.0;
    double interEdges = 0.0;
    for (const WeightedEdge& e : g.edges()) {
        if (clusterOf(e.u, p) == clusterOf(e.v, p)) {
            intraEdges += 1.0;
        } else {
            interEdges += 1.0;
        }
    }

    const double pairs = intra ? intraPairs : interPairs;
    const double edges = intra ? intraEdges : interEdges;
    if (pairs <= 0.0) {
        std::cerr << "warning: " << name << ": no " << (intra ? "intra" : "inter")
                  << "-cluster pairs exist; reporting 0\n";
        return 0.0;
    }
    return edges / pairs;
}

} // namespace

double modularity(const DynamicGraph& g, const Partition& p) {
    if (g.numEdges() == 0) {
        throw std::invalid_argument("modularity needs at least one edge");
    }

    // Seed every cluster up front so isolated nodes still contribute a term
    // (and so coverage is validated even for clusters without edges).
    std::map<ClusterKey, double> inWeight;
    std::map<ClusterKey, double> cutWeight;
    for (NodeId u : g.nodes()) {
        const ClusterKey k = clusterOf(u, p);
        inWeight.try_emplace(k, 0.0);
        cutWeight.try_emplace(k, 0.0);
    }

    double totalWeight = 0.0;
    for (const WeightedEdge& e : g.edges()) {
        totalWeight += e.weight;
        const ClusterKey ku = clusterOf(e.u, p);
        const ClusterKey kv = clusterOf(e.v, p);
        if (ku == kv) {
            inWeight[ku] += e.weight;
        } else {
            cutWeight[ku] += e.weight;
            cutWeight[kv] += e.weight;
        }
    }

    // Endpoint strength of a cluster is 2*in + cut. Splitting it this way
    // makes the one-cluster case cancel to zero exactly: in accumulates the
    // same operands as totalWeight, cut stays 0, and a_c divides out to 1.
    double q = 0.0;
    for (const auto& [key, in] : inWeight) {
        const double ecc = in / totalWeight;
        const double ac = (2.0 * in + cutWeight.at(key)) / (2.0 * totalWeight);
        q += ecc - ac * ac;
    }
    return q;
}

double vMeasure(const Partition& pred, const Partition& truth) {
    const Contingency c = contingencyOf(pred, truth);
    const double hTruth = entropyOf(c.truthCounts, c.n);
    const double hPred = entropyOf(c.predCounts, c.n);

    // Conditional entropies from the joint distribution.
    double hTruthGivenPred = 0.0;
    double hPredGivenTruth = 0.0;
    for (const auto& [keys, count] : c.joint) {
        const auto& [pk, tk] = keys;
        hTruthGivenPred -= (count / c.n) * std::log(count / c.predCounts.at(pk));
        hPredGivenTruth -= (count / c.n) * std::log(count / c.truthCounts.at(tk));
    }

    const double homogeneity = hTruth == 0.0 ? 1.0 : 1.0 - hTruthGivenPred / hTruth;
    const double completeness = hPred == 0.0 ? 1.0 : 1.0 - hPredGivenTruth / hPred;
    if (homogeneity + completeness == 0.0) return 0.0;
    return 2.0 * homogeneity * completeness / (homogeneity + completeness);
}

double nmi(const Partition& pred, const Partition& truth) {
    const Contingency c = contingencyOf(pred, truth);
    const double hPred = entropyOf(c.predCounts, c.n);
    const double hTruth = entropyOf(c.truthCounts, c.n);
    if (hPred + hTruth == 0.0) return 1.0; // two constant labelings agree trivially

    double mi = 0.0;
    for (const auto& [keys, count] : c.joint) {
        const auto& [pk, tk] = keys;
        mi += (count / c.n) * std::log(c.n * count / (c.predCounts.at(pk) * c.truthCounts.at(tk)));
    }
    if (mi <= 0.0) return 0.0; // rounding can leave a tiny negative on independent labelings
    return 2.0 * mi / (hPred + hTruth);
}

double intraDensity(const DynamicGraph& g, const Partition& p) {
    return pairDensity(g, p, true, "intraDensity");
}

double interSparseness(const DynamicGraph& g, const Partition& p) {
    return pairDensity(g, p, false, "interSparseness");
}

Partition flattenCommunities(const std::vector<std::vector<NodeId>>& communities) {
    Partition p;
    for (std::size_t i = 0; i < communities.size(); ++i) {
        for (NodeId u : communities[i]) {
            p.labels.emplace(u, static_cast<Label>(i)); // first listed community wins
        }
    }
    return p;
}

} // namespace nhc
