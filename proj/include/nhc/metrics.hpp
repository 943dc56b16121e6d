#pragma once

#include <vector>

#include "nhc/assignment.hpp"
#include "nhc/graph.hpp"

namespace nhc {

/**
 * Clustering quality scores. All functions treat an unassigned node as a
 * singleton cluster of its own, so partitions with unreachable nodes stay
 * comparable.
 */

/// Newman-Girvan modularity: sum over clusters of (intra-edge fraction minus
/// squared endpoint fraction). Weighted edges use weight fractions. Throws on
/// an edgeless graph or when p does not cover every node of g.
double modularity(const DynamicGraph& g, const Partition& p);

/// Harmonic mean of homogeneity and completeness over the label contingency
/// of pred vs truth. 1.0 for matching partitions, 0.0 when either side
/// carries no information about the other. Throws when the node sets differ
/// or are empty.
double vMeasure(const Partition& pred, const Partition& truth);

/// Mutual information between the labelings, normalized by the arithmetic
/// mean of the label entropies. Two constant labelings score 1. Throws when
/// the node sets differ or are empty.
double nmi(const Partition& pred, const Partition& truth);

/// Fraction of intra-cluster node pairs that carry an edge. Degenerate
/// denominator (only singleton clusters) yields 0 with a warning on stderr.
double intraDensity(const DynamicGraph& g, const Partition& p);

/// Fraction of inter-cluster node pairs that carry an edge (0 = perfectly
/// separated). Degenerate denominator (a single cluster) yields 0 with a
/// warning on stderr.
double interSparseness(const DynamicGraph& g, const Partition& p);

/// Reduces a community list to a partition: each node gets the first listed
/// community containing it (label = community index). Nodes in no community
/// are absent from the result.
Partition flattenCommunities(const std::vector<std::vector<NodeId>>& communities);

} // namespace nhc
