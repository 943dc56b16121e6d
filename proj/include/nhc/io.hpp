#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nhc/assignment.hpp"
#include "nhc/generators.hpp"
#include "nhc/graph.hpp"

namespace nhc {

/**
 * Reads a whitespace-separated edge list: one "u v" or "u v w" per line,
 * '#' lines and blank lines ignored, weight defaulting to 1.0. Self-loops
 * are skipped and duplicate pairs collapsed (first weight wins), each with a
 * warning on stderr. Parses line by line, so file size is not bounded by
 * memory.
 *
 * Throws std::runtime_error naming the file and line on malformed input,
 * non-positive weights, or an unreadable path.
 */
DynamicGraph readEdgeList(const std::string& path);

/// Writes "u v" (or "u v w" for non-unit weights) lines sorted by (u, v),
/// so equal graphs produce identical bytes. Isolated nodes have no
/// representation in this format. Throws std::runtime_error when the path
/// cannot be opened for writing.
void writeEdgeList(const DynamicGraph& g, const std::string& path);

/// Reads one community per line (whitespace-separated member ids, '#' and
/// blank lines ignored). Throws std::runtime_error with the file and line on
/// malformed ids, and on files containing no communities at all.
std::vector<std::vector<NodeId>> readCommunities(const std::string& path);

/// Writes "node<TAB>label" lines sorted by node id.
void writeCrispAssignments(const Partition& p, const std::string& path);

/// Reads the writeCrispAssignments format back. Throws std::runtime_error
/// with the file and line on malformed lines or repeated nodes.
Partition readCrispAssignments(const std::string& path);

/// Writes "node<TAB>label:membership,..." lines sorted by node id, with
/// memberships ordered by label and printed exactly (round-trip safe).
void writeFuzzyAssignments(const Cover& c, const std::string& path);

/// Reads the writeFuzzyAssignments format back. Throws std::runtime_error
/// with the file and line on malformed lines, repeated nodes or labels, and
/// memberships that do not sum to 1 within 1e-9.
Cover readFuzzyAssignments(const std::string& path);

/// Writes "add u v" / "remove u v" lines in event order.
void writeScript(const MutationScript& s, const std::string& path);

/// Reads the writeScript format back ('#' and blank lines ignored). Event
/// validity against any particular graph is the replayer's concern. Throws
/// std::runtime_error with the file and line on malformed lines.
MutationScript readScript(const std::string& path);

/// One replayed event together with the message traffic it caused.
struct EventRecord {
    MutationEvent event;
    std::uint64_t messages = 0;
};

/// Writes "add|remove u v messages" lines in replay order.
void writeEventTrace(const std::vector<EventRecord>& trace, const std::string& path);

} // namespace nhc
