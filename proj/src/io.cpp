#include "nhc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nhc {

namespace {

[[noreturn]] void fail(const std::string& path, std::uint64_t line, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

NodeId parseNodeId(const std::string& token, const std::string& path, std::uint64_t line) {
    NodeId value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
        fail(path, line, "expected a non-negative node id, got '" + token + "'");
    }
    return value;
}

Label parseLabel(const std::string& token, const std::string& path, std::uint64_t line) {
    Label value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size()) {
        fail(path, line, "expected an integer label, got '" + token + "'");
    }
    return value;
}

double parseReal(const std::string& token, const std::string& path, std::uint64_t line) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end != begin + token.size() || token.empty() || !std::isfinite(value)) {
        fail(path, line, "expected a real number, got '" + token + "'");
    }
    return value;
}

/// Yields non-comment, non-blank lines with their 1-based numbers, trimming
/// a trailing carriage return so CRLF files parse too.
class LineReader {
public:
    explicit LineReader(const std::string& path) : path_(path), in_(path) {
        if (!in_) throw std::runtime_error("cannot open " + path + " for reading");
    }

    bool next(std::string& line, std::uint64_t& number) {
        while (std::getline(in_, line)) {
            ++lineNo_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto firstContent = line.find_first_not_of(" \t");
            if (firstContent == std::string::npos || line[firstContent] == '#') continue;
            number = lineNo_;
            return true;
        }
        return false;
    }

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ifstream in_;
    std::uint64_t lineNo_ = 0;
};

std::ofstream openForWriting(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    return out;
}

void finishWriting(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + path);
}

std::string formatReal(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::vector<std::string> tokensOf(const std::string& line) {
    std::istringstream row(line);
    std::vector<std::string> tokens;
    std::string token;
    while (row >> token) tokens.push_back(std::move(token));
    return tokens;
}

} // namespace

DynamicGraph readEdgeList(const std::string& path) {
    LineReader reader(path);
    DynamicGraph g;
    std::string line;
    std::uint64_t lineNo = 0;
    while (reader.next(line, lineNo)) {
        const std::vector<std::string> tokens = tokensOf(line);
        if (tokens.size() < 2 || tokens.size() > 3) {
            fail(path, lineNo, "expected 'u v' or 'u v w', got " +
                                   std::to_string(tokens.size()) + " fields");
        }
        const NodeId u = parseNodeId(tokens[0], path, lineNo);
        const NodeId v = parseNodeId(tokens[1], path, lineNo);
        double w = 1.0;
        if (tokens.size() == 3) {
            w = parseReal(tokens[2], path, lineNo);
            if (!(w > 0.0)) fail(path, lineNo, "edge weight must be positive");
        }
        if (u == v) {
            std::cerr << "warning: " << path << ":" << lineNo << ": self-loop on node " << u
                      << " skipped\n";
            continue;
        }
        if (g.hasEdge(u, v)) {
            std::cerr << "warning: " << path << ":" << lineNo << ": duplicate edge " << u << "-"
                      << v << " collapsed\n";
            continue;
        }
        g.addEdge(u, v, w);
    }
    return g;
}

void writeEdgeList(const DynamicGraph& g, const std::string& path) {
    std::vector<WeightedEdge> edges = g.edges();
    std::sort(edges.begin(), edges.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) {
                  return std::pair(a.u, a.v) < std::pair(b.u, b.v);
              });
    std::ofstream out = openForWriting(path);
    for (const WeightedEdge& e : edges) {
        out << e.u << ' ' << e.v;
        if (e.weight != 1.0) out << ' ' << formatReal(e.weight);
        out << '\n';
    }
    finishWriting(out, path);
}

std::vector<std::vector<NodeId>> readCommunities(const std::string& path) {
    LineReader reader(path);
    std::vector<std::vector<NodeId>> communities;
    std::string line;
    std::uint64_t lineNo = 0;
    while (reader.next(line, lineNo)) {
        std::vector<NodeId> members;
        for (const std::string& token : tokensOf(line)) {
            members.push_back(parseNodeId(token, path, lineNo));
        }
        communities.push_back(std::move(members));
    }
    if (communities.empty()) {
        throw std::runtime_error(path + ": no communities found");
    }
    return communities;
}

void writeCrispAssignments(const Partition& p, const std::string& path) {
    std::vector<std::pair<NodeId, Label>> rows(p.labels.begin(), p.labels.end());
    std::sort(rows.begin(), rows.end());
    std::ofstream out = openForWriting(path);
    for (const auto& [node, label] : rows) {
        out << node << '\t' << label << '\n';
    }
    finishWriting(out, path);
}

Partition readCrispAssignments(const std::string& path) {
    LineReader reader(path);
    Partition p;
    std::string line;
    std::uint64_t lineNo = 0;
    while (reader.next(line, lineNo)) {
        const std::vector<std::string> tokens = tokensOf(line);
        if (tokens.size() != 2) {
            fail(path, lineNo, "expected 'node<TAB>label', got " +
                                   std::to_string(tokens.size()) + " fields");
        }
        const NodeId node = parseNodeId(tokens[0], path, lineNo);
        const Label label = parseLabel(tokens[1], path, lineNo);
        if (!p.labels.emplace(node, label).second) {
            fail(path, lineNo, "node " + std::to_string(node) + " assigned twice");
        }
    }
    return p;
}

void writeFuzzyAssignments(const Cover& c, const std::string& path) {
    std::vector<NodeId> nodes;
    nodes.reserve(c.memberships.size());
    for (const auto& [node, shares] : c.memberships) nodes.push_back(node);
    std::sort(nodes.begin(), nodes.end());

    std::ofstream out = openForWriting(path);
    for (NodeId node : nodes) {
        out << node << '\t';
        bool first = true;
        for (const auto& [label, share] : c.memberships.at(node)) {
            if (!first) out << ',';
            out << label << ':' << formatReal(share);
            first = false;
        }
        out << '\n';
    }
    finishWriting(out, path);
}

Cover readFuzzyAssignments(const std::string& path) {
    LineReader reader(path);
    Cover c;
    std::string line;
    std::uint64_t lineNo = 0;
    while (reader.next(line, lineNo)) {
        const std::vector<std::string> tokens = tokensOf(line);
        if (tokens.size() != 2) {
            fail(path, lineNo, "expected 'node<TAB>label:membership,...', got " +
                                   std::to_string(tokens.size()) + " fields");
        }
        const NodeId node = parseNodeId(tokens[0], path, lineNo);
        std::map<Label, double> shares;
        double sum = 0.0;
        std::istringstream list(tokens[1]);
        std::string item;
        while (std::getline(list, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos) {
                fail(path, lineNo, "expected 'label:membership', got '" + item + "'");
            }
            const Label label = parseLabel(item.substr(0, colon), path, lineNo);
            const double share = parseReal(item.substr(colon + 1), path, lineNo);
            if (share < 0.0 || share > 1.0 + 1e-9) {
                fail(path, lineNo, "membership " + formatReal(share) + " outside [0, 1]");
            }
            if (!shares.emplace(label, share).second) {
                fail(path, lineNo, "label " + std::to_string(label) + " listed twice");
            }
            sum += share;
        }
        if (shares.empty()) fail(path, lineNo, "empty membership list");
        if (std::fabs(sum - 1.0) > 1e-9) {
            fail(path, lineNo, "memberships sum to " + formatReal(sum) + ", expected 1");
        }
        if (!c.memberships.emplace(node, std::move(shares)).second) {
            fail(path, lineNo, "node " + std::to_string(node) + " assigned twice");
        }
    }
    return c;
}

void writeScript(const MutationScript& s, const std::string& path) {
    std::ofstream out = openForWriting(path);
    for (const MutationEvent& e : s.events) {
        out << (e.kind == MutationEvent::Kind::AddEdge ? "add" : "remove") << ' ' << e.u << ' '
            << e.v << '\n';
    }
    finishWriting(out, path);
}

MutationScript readScript(const std::string& path) {
    LineReader reader(path);
    MutationScript s;
    std::string line;
    std::uint64_t lineNo = 0;
    while (reader.next(line, lineNo)) {
        const std::vector<std::string> tokens = tokensOf(line);
        if (tokens.size() != 3) {
            fail(path, lineNo, "expected 'add|remove u v', got " +
                                   std::to_string(tokens.size()) + " fields");
        }
        MutationEvent e;
        if (tokens[0] == "add") {
            e.kind = MutationEvent::Kind::AddEdge;
        } else if (tokens[0] == "remove") {
            e.kind = MutationEvent::Kind::RemoveEdge;
        } else {
            fail(path, lineNo, "unknown event kind '" + tokens[0] + "'");
        }
        e.u = parseNodeId(tokens[1], path, lineNo);
        e.v = parseNodeId(tokens[2], path, lineNo);
        s.events.push_back(e);
    }
    return s;
}

void writeEventTrace(const std::vector<EventRecord>& trace, const std::string& path) {
    std::ofstream out = openForWriting(path);
    for (const EventRecord& r : trace) {
        out << (r.event.kind == MutationEvent::Kind::AddEdge ? "add" : "remove") << ' '
            << r.event.u << ' ' << r.event.v << ' ' << r.messages << '\n';
    }
    finishWriting(out, path);
}

} // namespace nhc
