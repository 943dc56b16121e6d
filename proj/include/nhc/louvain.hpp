#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nhc/assignment.hpp"
#include "nhc/graph.hpp"

namespace nhc {

/**
 * Hierarchy produced by greedy modularity optimization. Level 0 partitions
 * the original nodes; every later level partitions the previous level's
 * communities (its node ids are the previous level's labels). Modularity is
 * non-decreasing from level to level.
 */
struct Dendrogram {
    std::vector<Partition> levels;
};

/**
 * Greedy modularity clustering: repeated local-move sweeps (each node joins
 * the neighboring community with the largest positive gain), then community
 * aggregation, until a level stops improving modularity. Sweep order is
 * shuffled from the seed; a fixed seed gives a fixed result.
 *
 * Throws std::invalid_argument on a graph without edges.
 */
Dendrogram louvain(const DynamicGraph& g, std::uint64_t seed);

/// Composes dendrogram levels down to original nodes: the partition the
/// given level induces on the input graph. Throws std::out_of_range on a
/// bad level index.
Partition flatten(const Dendrogram& d, std::size_t level);

} // namespace nhc
