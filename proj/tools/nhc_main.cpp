// Command-line front end for the nearest-hub clustering library.
//
// Subcommands:
//   cluster        static clustering of an edge list
//   stream         replay a mutation script with incremental updates
//   bench-dynamic  message-cost benchmark over generated graphs and scripts
//   eval           score stored assignments against a graph or ground truth
//   louvain        modularity-based baseline clustering
//   generate       emit a synthetic graph (and optionally a mutation script)
//
// All numeric output uses round-trip precision so repeated runs with the same
// seed are byte-identical and results from different commands diff cleanly.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nhc/batch.hpp"
#include "nhc/engine.hpp"
#include "nhc/generators.hpp"
#include "nhc/graph.hpp"
#include "nhc/hub_policy.hpp"
#include "nhc/io.hpp"
#include "nhc/louvain.hpp"
#include "nhc/metrics.hpp"

namespace {

using namespace nhc;

std::string fmtReal(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

// Seed resolution: an explicit --seed wins, then the NHC_SEED environment
// variable, then 1.
std::uint64_t resolveSeed(const CLI::Option* seedOpt, std::uint64_t flagValue) {
    if (seedOpt->count() > 0) {
        return flagValue;
    }
    const char* env = std::getenv("NHC_SEED");
    if (env == nullptr || *env == '\0') {
        return 1;
    }
    std::uint64_t parsed = 0;
    const char* end = env + std::string(env).size();
    auto res = std::from_chars(env, end, parsed);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw std::runtime_error("NHC_SEED is not an unsigned integer: '" + std::string(env) + "'");
    }
    return parsed;
}

// The three mutually exclusive hub-selection flags, shared by every command
// that builds an engine.
struct PolicyOptions {
    std::uint64_t minDegree = 1;
    std::uint64_t topHubs = 1;
    double hubFraction = 0.1;
    CLI::Option* minOpt = nullptr;
    CLI::Option* topOpt = nullptr;
    CLI::Option* fracOpt = nullptr;

    void attach(CLI::App& cmd, bool required) {
        auto* group = cmd.add_option_group("hub policy", "rule that decides which nodes are hubs");
        minOpt = group->add_option("--min-degree", minDegree,
                                   "nodes with degree >= this threshold are hubs");
        topOpt = group->add_option("--top-hubs", topHubs,
                                   "the N highest-degree nodes are hubs (degree ties included)");
        fracOpt = group->add_option("--hub-fraction", hubFraction,
                                    "degree threshold chosen so roughly this fraction of nodes are hubs");
        group->require_option(required ? 1 : 0, 1);
    }

    bool given() const {
        return minOpt->count() > 0 || topOpt->count() > 0 || fracOpt->count() > 0;
    }

    HubPolicy policy() const {
        if (minOpt->count() > 0) {
            return FixedThreshold{minDegree};
        }
        if (topOpt->count() > 0) {
            return TopN{topHubs};
        }
        return Fraction{hubFraction};
    }

    std::string describe() const {
        if (minOpt->count() > 0) {
            return "min-degree " + std::to_string(minDegree);
        }
        if (topOpt->count() > 0) {
            return "top-hubs " + std::to_string(topHubs);
        }
        return "hub-fraction " + fmtReal(hubFraction);
    }
};

DynamicGraph loadGraph(const std::string& path) {
    DynamicGraph g = readEdgeList(path);
    if (g.numNodes() == 0) {
        throw std::runtime_error(path + ": graph is empty");
    }
    return g;
}

std::uint64_t countClusters(const Partition& p) {
    std::set<Label> labels;
    for (const auto& [node, label] : p.labels) {
        if (label != kUnassigned) {
            labels.insert(label);
        }
    }
    return labels.size();
}

std::uint64_t countUnassigned(const Partition& p) {
    std::uint64_t n = 0;
    for (const auto& [node, label] : p.labels) {
        if (label == kUnassigned) {
            ++n;
        }
    }
    return n;
}

// Final block shared by cluster and stream so an empty script reproduces the
// static output verbatim.
void printClusteringSummary(const DynamicGraph& g, const Engine& engine,
                            const ResolvedHubPolicy& resolved, const Partition& crisp) {
    std::cout << "nodes: " << g.numNodes() << "\n";
    std::cout << "edges: " << g.numEdges() << "\n";
    std::cout << "d_min: " << resolved.dMin() << "\n";
    std::cout << "hubs: " << engine.hubs().size() << "\n";
    std::cout << "clusters: " << countClusters(crisp) << "\n";
    std::cout << "unassigned: " << countUnassigned(crisp) << "\n";
    std::cout << "modularity: " << fmtReal(modularity(g, crisp)) << "\n";
}

// Scores a prediction against ground-truth communities on the node overlap.
// Nodes outside the overlap are dropped, with the counts reported so silent
// shrinkage is visible.
void scoreAgainstTruth(const Partition& pred, const std::string& truthPath) {
    auto communities = readCommunities(truthPath);
    Partition truth = flattenCommunities(communities);
    Partition predShared;
    Partition truthShared;
    for (const auto& [node, label] : truth.labels) {
        auto it = pred.labels.find(node);
        if (it != pred.labels.end()) {
            predShared.labels.emplace(node, it->second);
            truthShared.labels.emplace(node, label);
        }
    }
    std::cout << "truth_communities: " << communities.size() << "\n";
    std::cout << "truth_nodes: " << truth.labels.size() << "\n";
    std::cout << "scored_nodes: " << predShared.labels.size() << "\n";
    if (predShared.labels.empty()) {
        throw std::runtime_error(truthPath + ": ground truth shares no nodes with the prediction");
    }
    std::cout << "v_measure: " << fmtReal(vMeasure(predShared, truthShared)) << "\n";
    std::cout << "nmi: " << fmtReal(nmi(predShared, truthShared)) << "\n";
}

// ---------------------------------------------------------------------------
// cluster

struct ClusterConfig {
    std::string input;
    std::string output;
    std::string fuzzyOutput;
    std::string truth;
    PolicyOptions policy;
};

int runCluster(const ClusterConfig& cfg) {
    DynamicGraph g = loadGraph(cfg.input);
    auto resolved = ResolvedHubPolicy::resolve(cfg.policy.policy(), g.degreeSequence());
    Engine engine = initializeEngine(g, resolved);
    Partition crisp = engine.crispAssignment();
    if (!cfg.output.empty()) {
        writeCrispAssignments(crisp, cfg.output);
    }
    if (!cfg.fuzzyOutput.empty()) {
        writeFuzzyAssignments(engine.fuzzyAssignment(), cfg.fuzzyOutput);
    }
    printClusteringSummary(g, engine, resolved, crisp);
    if (!cfg.truth.empty()) {
        scoreAgainstTruth(crisp, cfg.truth);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// stream

struct StreamConfig {
    std::string input;
    std::string script;
    std::string output;
    std::string fuzzyOutput;
    std::string tracePath;
    std::uint64_t recheckEvery = 1;
    bool verify = false;
    PolicyOptions policy;
};

int runStream(const StreamConfig& cfg) {
    DynamicGraph g = loadGraph(cfg.input);
    MutationScript script = readScript(cfg.script);
    HubPolicy policy = cfg.policy.policy();
    auto resolved = ResolvedHubPolicy::resolve(policy, g.degreeSequence());
    Engine engine = initializeEngine(g, resolved);

    std::vector<EventRecord> trace;
    trace.reserve(script.events.size());
    std::uint64_t totalMessages = 0;
    std::uint64_t maxMessages = 0;
    std::uint64_t promotions = 0;
    std::uint64_t demotions = 0;

    for (std::size_t i = 0; i < script.events.size(); ++i) {
        const MutationEvent& e = script.events[i];
        std::uint64_t messages = 0;
        try {
            applyEvent(g, e);
            if (e.kind == MutationEvent::Kind::AddEdge) {
                messages += engine.onEdgeAdded(e.u, e.v).messagesProcessed;
            } else {
                messages += engine.onEdgeRemoved(e.u, e.v).messagesProcessed;
            }
            if (cfg.recheckEvery > 0 && (i + 1) % cfg.recheckEvery == 0) {
                resolved = ResolvedHubPolicy::resolve(policy, g.degreeSequence());
                std::vector<NodeId> nodes = g.nodes();
                std::sort(nodes.begin(), nodes.end());
                for (NodeId u : nodes) {
                    bool shouldBeHub = resolved.isHub(g.degree(u));
                    if (shouldBeHub && !engine.isHubNode(u)) {
                        messages += engine.promoteHub(u).messagesProcessed;
                        ++promotions;
                    } else if (!shouldBeHub && engine.isHubNode(u)) {
                        messages += engine.demoteHub(u).messagesProcessed;
                        ++demotions;
                    }
                }
            }
        } catch (const std::exception& ex) {
            throw std::runtime_error("event " + std::to_string(i + 1) + ": " + ex.what());
        }
        trace.push_back(EventRecord{e, messages});
        totalMessages += messages;
        maxMessages = std::max(maxMessages, messages);
    }

    if (!cfg.tracePath.empty()) {
        writeEventTrace(trace, cfg.tracePath);
    }
    Partition crisp = engine.crispAssignment();
    if (!cfg.output.empty()) {
        writeCrispAssignments(crisp, cfg.output);
    }
    if (!cfg.fuzzyOutput.empty()) {
        writeFuzzyAssignments(engine.fuzzyAssignment(), cfg.fuzzyOutput);
    }

    std::cout << "events: " << script.events.size() << "\n";
    std::cout << "messages_total: " << totalMessages << "\n";
    double mean = script.events.empty()
                      ? 0.0
                      : static_cast<double>(totalMessages) / static_cast<double>(script.events.size());
    std::cout << "messages_mean: " << fmtReal(mean) << "\n";
    std::cout << "messages_max: " << maxMessages << "\n";
    std::cout << "promotions: " << promotions << "\n";
    std::cout << "demotions: " << demotions << "\n";
    printClusteringSummary(g, engine, resolved, crisp);

    if (cfg.verify) {
        BatchState batch = batchRecompute(g, engine.hubs());
        std::string diff;
        if (!statesMatch(engine, batch, 1e-9, &diff)) {
            std::cerr << "verify failed: " << diff << "\n";
            return 1;
        }
        std::cout << "verified: engine state matches batch recomputation" << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bench-dynamic

struct BenchConfig {
    std::uint64_t n = 1000;
    std::uint64_t m = 10;
    double p = 0.7;
    std::uint64_t graphs = 100;
    std::uint64_t events = 100;
    std::string kind;
    std::uint64_t seed = 1;
    std::string countsOut;
    PolicyOptions policy;
};

// Histogram bin for a message count: 0, 1 and 2 get their own bins, larger
// counts share power-of-two bins (3-4, 5-8, 9-16, ...).
std::size_t histogramBin(std::uint64_t count) {
    if (count <= 2) {
        return static_cast<std::size_t>(count);
    }
    std::size_t bin = 2;
    std::uint64_t upper = 2;
    while (upper < count) {
        upper *= 2;
        ++bin;
    }
    return bin;
}

std::string histogramLabel(std::size_t bin) {
    if (bin <= 2) {
        return std::to_string(bin);
    }
    std::uint64_t upper = std::uint64_t{1} << (bin - 1);
    std::uint64_t lower = (upper >> 1) + 1;
    return std::to_string(lower) + "-" + std::to_string(upper);
}

// Default benchmark threshold, calibrated on Holme-Kim (1000, 10, 0.7)
// graphs; see the README benchmark section.
constexpr std::uint64_t kBenchDefaultMinDegree = 40;

int runBench(const BenchConfig& cfg, const CLI::Option* seedOpt) {
    std::uint64_t seed = resolveSeed(seedOpt, cfg.seed);
    bool isAdd = cfg.kind == "add";
    HubPolicy policy =
        cfg.policy.given() ? cfg.policy.policy() : HubPolicy{FixedThreshold{kBenchDefaultMinDegree}};

    std::vector<std::uint64_t> counts;
    counts.reserve(cfg.graphs * cfg.events);
    for (std::uint64_t i = 0; i < cfg.graphs; ++i) {
        DynamicGraph g = holmeKim({cfg.n, cfg.m, cfg.p, seed + i});
        auto resolved = ResolvedHubPolicy::resolve(policy, g.degreeSequence());
        Engine engine = initializeEngine(g, resolved);
        MutationScript script = isAdd ? randomScript(g, cfg.events, 0, seed + 1000000 + i)
                                      : randomScript(g, 0, cfg.events, seed + 1000000 + i);
        for (const MutationEvent& e : script.events) {
            applyEvent(g, e);
            std::uint64_t messages = 0;
            if (e.kind == MutationEvent::Kind::AddEdge) {
                messages += engine.onEdgeAdded(e.u, e.v).messagesProcessed;
            } else {
                messages += engine.onEdgeRemoved(e.u, e.v).messagesProcessed;
            }
            // The event only changes the degrees of its endpoints, so with the
            // per-graph threshold fixed those are the only promotion or
            // demotion candidates.
            NodeId lo = std::min(e.u, e.v);
            NodeId hi = std::max(e.u, e.v);
            for (NodeId w : {lo, hi}) {
                bool shouldBeHub = resolved.isHub(g.degree(w));
                if (shouldBeHub && !engine.isHubNode(w)) {
                    messages += engine.promoteHub(w).messagesProcessed;
                } else if (!shouldBeHub && engine.isHubNode(w)) {
                    messages += engine.demoteHub(w).messagesProcessed;
                }
            }
            counts.push_back(messages);
        }
    }

    if (!cfg.countsOut.empty()) {
        std::ofstream out(cfg.countsOut);
        if (!out) {
            throw std::runtime_error("cannot open " + cfg.countsOut + " for writing");
        }
        for (std::uint64_t c : counts) {
            out << c << "\n";
        }
        if (!out.flush()) {
            throw std::runtime_error("failed writing " + cfg.countsOut);
        }
    }

    std::uint64_t total = 0;
    std::uint64_t maxCount = 0;
    std::uint64_t atMinimum = 0;
    const std::uint64_t minimumMessages = isAdd ? 2 : 0;
    std::map<std::size_t, std::uint64_t> bins;
    for (std::uint64_t c : counts) {
        total += c;
        maxCount = std::max(maxCount, c);
        if (c == minimumMessages) {
            ++atMinimum;
        }
        ++bins[histogramBin(c)];
    }

    std::cout << "kind: " << cfg.kind << "\n";
    std::cout << "n: " << cfg.n << "\n";
    std::cout << "m: " << cfg.m << "\n";
    std::cout << "p: " << fmtReal(cfg.p) << "\n";
    std::cout << "graphs: " << cfg.graphs << "\n";
    std::cout << "events_per_graph: " << cfg.events << "\n";
    std::cout << "seed: " << seed << "\n";
    std::cout << "policy: "
              << (cfg.policy.given() ? cfg.policy.describe()
                                     : "min-degree " + std::to_string(kBenchDefaultMinDegree))
              << "\n";
    std::cout << "events: " << counts.size() << "\n";
    std::cout << "histogram:" << "\n";
    if (!bins.empty()) {
        std::size_t lastBin = bins.rbegin()->first;
        for (std::size_t bin = 0; bin <= lastBin; ++bin) {
            auto it = bins.find(bin);
            std::uint64_t c = it == bins.end() ? 0 : it->second;
            double fraction = static_cast<double>(c) / static_cast<double>(counts.size());
            std::cout << "  " << histogramLabel(bin) << ": " << c << " " << fmtReal(fraction) << "\n";
        }
    }
    double fractionAtMinimum =
        counts.empty() ? 0.0 : static_cast<double>(atMinimum) / static_cast<double>(counts.size());
    double mean = counts.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(counts.size());
    std::cout << "fraction_at_" << minimumMessages << ": " << fmtReal(fractionAtMinimum) << "\n";
    std::cout << "messages_mean: " << fmtReal(mean) << "\n";
    std::cout << "messages_max: " << maxCount << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// eval

struct EvalConfig {
    std::string pred;
    std::string graph;
    std::string truth;
};

int runEval(const EvalConfig& cfg) {
    Partition pred = readCrispAssignments(cfg.pred);
    std::cout << "pred_nodes: " << pred.labels.size() << "\n";
    std::cout << "pred_clusters: " << countClusters(pred) << "\n";

    if (!cfg.graph.empty()) {
        DynamicGraph g = loadGraph(cfg.graph);
        std::uint64_t missing = 0;
        for (NodeId u : g.nodes()) {
            if (pred.labels.find(u) == pred.labels.end()) {
                ++missing;
            }
        }
        std::uint64_t extra = 0;
        for (const auto& [node, label] : pred.labels) {
            if (!g.hasNode(node)) {
                ++extra;
            }
        }
        if (missing > 0 || extra > 0) {
            throw std::runtime_error("prediction covers " + std::to_string(pred.labels.size()) +
                                     " nodes but the graph has " + std::to_string(g.numNodes()) + " (" +
                                     std::to_string(missing) + " graph nodes missing from the prediction, " +
                                     std::to_string(extra) + " prediction nodes not in the graph)");
        }
        std::cout << "graph_nodes: " << g.numNodes() << "\n";
        std::cout << "graph_edges: " << g.numEdges() << "\n";
        std::cout << "modularity: " << fmtReal(modularity(g, pred)) << "\n";
        std::cout << "intra_density: " << fmtReal(intraDensity(g, pred)) << "\n";
        std::cout << "inter_sparseness: " << fmtReal(interSparseness(g, pred)) << "\n";
    }
    if (!cfg.truth.empty()) {
        scoreAgainstTruth(pred, cfg.truth);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// louvain

struct LouvainConfig {
    std::string input;
    std::string output;
    std::string levelsPrefix;
    std::uint64_t seed = 1;
    std::int64_t level = -1;
};

int runLouvain(const LouvainConfig& cfg, const CLI::Option* seedOpt) {
    std::uint64_t seed = resolveSeed(seedOpt, cfg.seed);
    DynamicGraph g = loadGraph(cfg.input);
    Dendrogram d = louvain(g, seed);

    std::cout << "nodes: " << g.numNodes() << "\n";
    std::cout << "edges: " << g.numEdges() << "\n";
    std::cout << "seed: " << seed << "\n";
    std::cout << "levels: " << d.levels.size() << "\n";
    for (std::size_t i = 0; i < d.levels.size(); ++i) {
        Partition flat = flatten(d, i);
        std::cout << "level " << i << ": communities " << countClusters(flat) << " modularity "
                  << fmtReal(modularity(g, flat)) << "\n";
        if (!cfg.levelsPrefix.empty()) {
            writeCrispAssignments(flat, cfg.levelsPrefix + std::to_string(i) + ".tsv");
        }
    }

    std::size_t emit = d.levels.size() - 1;
    if (cfg.level >= 0) {
        if (static_cast<std::size_t>(cfg.level) >= d.levels.size()) {
            throw std::runtime_error("--level " + std::to_string(cfg.level) + " out of range; run has " +
                                     std::to_string(d.levels.size()) + " levels");
        }
        emit = static_cast<std::size_t>(cfg.level);
    }
    Partition chosen = flatten(d, emit);
    std::cout << "emitted_level: " << emit << "\n";
    std::cout << "communities: " << countClusters(chosen) << "\n";
    std::cout << "modularity: " << fmtReal(modularity(g, chosen)) << "\n";
    if (!cfg.output.empty()) {
        writeCrispAssignments(chosen, cfg.output);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateConfig {
    std::uint64_t n = 1000;
    std::uint64_t m = 10;
    double p = 0.7;
    std::uint64_t seed = 1;
    std::string output;
    std::string scriptOut;
    std::uint64_t adds = 0;
    std::uint64_t removes = 0;
};

int runGenerate(const GenerateConfig& cfg, const CLI::Option* seedOpt) {
    std::uint64_t seed = resolveSeed(seedOpt, cfg.seed);
    DynamicGraph g = holmeKim({cfg.n, cfg.m, cfg.p, seed});
    writeEdgeList(g, cfg.output);
    std::cout << "nodes: " << g.numNodes() << "\n";
    std::cout << "edges: " << g.numEdges() << "\n";
    std::cout << "seed: " << seed << "\n";
    if (!cfg.scriptOut.empty()) {
        MutationScript script = randomScript(g, cfg.adds, cfg.removes, seed + 1);
        writeScript(script, cfg.scriptOut);
        std::cout << "script_events: " << script.events.size() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nearest-hub clustering for dynamic graphs"};
    app.require_subcommand(1);
    app.footer("Seeds default to the NHC_SEED environment variable, then 1.");

    ClusterConfig clusterCfg;
    auto* cluster = app.add_subcommand("cluster", "cluster a static edge list");
    cluster->add_option("--input", clusterCfg.input, "edge list to cluster")->required();
    cluster->add_option("--output", clusterCfg.output, "write crisp assignments here");
    cluster->add_option("--fuzzy-output", clusterCfg.fuzzyOutput, "write fuzzy assignments here");
    cluster->add_option("--truth", clusterCfg.truth, "community file to score against");
    clusterCfg.policy.attach(*cluster, true);

    StreamConfig streamCfg;
    auto* stream = app.add_subcommand("stream", "replay a mutation script incrementally");
    stream->add_option("--input", streamCfg.input, "base edge list")->required();
    stream->add_option("--script", streamCfg.script, "mutation script to replay")->required();
    stream->add_option("--output", streamCfg.output, "write final crisp assignments here");
    stream->add_option("--fuzzy-output", streamCfg.fuzzyOutput, "write final fuzzy assignments here");
    stream->add_option("--trace", streamCfg.tracePath, "write the per-event message trace here");
    stream->add_option("--recheck-every", streamCfg.recheckEvery,
                       "re-check the hub policy after every N events (0 disables)")
        ->capture_default_str();
    stream->add_flag("--verify", streamCfg.verify, "check the final state against a batch recomputation");
    streamCfg.policy.attach(*stream, true);

    BenchConfig benchCfg;
    auto* bench = app.add_subcommand("bench-dynamic", "message-cost benchmark on generated graphs");
    bench->add_option("--n", benchCfg.n, "nodes per graph")->capture_default_str();
    bench->add_option("--m", benchCfg.m, "edges per arriving node")->capture_default_str();
    bench->add_option("--p", benchCfg.p, "triangle-closing probability")->capture_default_str();
    bench->add_option("--graphs", benchCfg.graphs, "number of graphs")->capture_default_str();
    bench->add_option("--events", benchCfg.events, "events per graph")->capture_default_str();
    bench->add_option("--kind", benchCfg.kind, "event kind: add or remove")
        ->required()
        ->check(CLI::IsMember({"add", "remove"}));
    auto* benchSeed = bench->add_option("--seed", benchCfg.seed, "base seed")->capture_default_str();
    bench->add_option("--counts-out", benchCfg.countsOut, "write raw per-event message counts here");
    benchCfg.policy.attach(*bench, false);

    EvalConfig evalCfg;
    auto* eval = app.add_subcommand("eval", "score stored crisp assignments");
    eval->add_option("--pred", evalCfg.pred, "crisp assignment file to score")->required();
    eval->add_option("--graph", evalCfg.graph, "edge list for structural metrics");
    eval->add_option("--truth", evalCfg.truth, "community file for agreement metrics");

    LouvainConfig louvainCfg;
    auto* louvainCmd = app.add_subcommand("louvain", "modularity-based baseline clustering");
    louvainCmd->add_option("--input", louvainCfg.input, "edge list to cluster")->required();
    louvainCmd->add_option("--output", louvainCfg.output, "write the emitted partition here");
    louvainCmd->add_option("--levels-prefix", louvainCfg.levelsPrefix,
                           "write every level to <prefix><level>.tsv");
    auto* louvainSeed = louvainCmd->add_option("--seed", louvainCfg.seed, "seed for node visiting order")
                            ->capture_default_str();
    louvainCmd->add_option("--level", louvainCfg.level,
                           "dendrogram level to emit (0 = finest, default = top)");

    GenerateConfig genCfg;
    auto* gen = app.add_subcommand("generate", "emit a synthetic scale-free graph");
    gen->add_option("--n", genCfg.n, "nodes")->capture_default_str();
    gen->add_option("--m", genCfg.m, "edges per arriving node")->capture_default_str();
    gen->add_option("--p", genCfg.p, "triangle-closing probability")->capture_default_str();
    auto* genSeed = gen->add_option("--seed", genCfg.seed, "generator seed")->capture_default_str();
    gen->add_option("--output", genCfg.output, "write the edge list here")->required();
    gen->add_option("--script-out", genCfg.scriptOut, "also write a mutation script here");
    gen->add_option("--adds", genCfg.adds, "edge additions in the script")->capture_default_str();
    gen->add_option("--removes", genCfg.removes, "edge removals in the script")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cluster->parsed()) {
            return runCluster(clusterCfg);
        }
        if (stream->parsed()) {
            return runStream(streamCfg);
        }
        if (bench->parsed()) {
            return runBench(benchCfg, benchSeed);
        }
        if (eval->parsed()) {
            if (evalCfg.graph.empty() && evalCfg.truth.empty()) {
                throw std::runtime_error("eval needs --graph and/or --truth");
            }
            return runEval(evalCfg);
        }
        if (louvainCmd->parsed()) {
            return runLouvain(louvainCfg, louvainSeed);
        }
        if (gen->parsed()) {
            return runGenerate(genCfg, genSeed);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
