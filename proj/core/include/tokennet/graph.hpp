#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tokennet/counts.hpp"
#include "tokennet/influence.hpp"

namespace tokennet {

struct GraphNode {
    int id = 0;
    int group = 0;
    double influence_size = 1.0;  // node size source: std_rho + std_gamma when scores exist
    int self_giving = 0;          // y(i, i, T), drawn as border weight
    bool has_position = false;
    double x = 0.0;
    double y = 0.0;
};

struct GraphEdge {
    int a = 0;  // a < b
    int b = 0;
    int weight = 0;  // y(a,b,T) + y(b,a,T), present only when positive
};

/// Undirected weighted view of a whole game: one node per player, one edge per
/// pair that exchanged at least one token in either direction.
struct GameGraph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
};

enum class GraphFormat {
    GraphML,
    Dot,
};

/// Builds the exchange graph at the final round. With scores, node size is the
/// sum of the two standardized influence metrics; without, every node gets 1.
GameGraph build_graph(const CumulativeCounts& counts, const InfluenceScores* scores = nullptr);

/// Classic force-directed layout: repulsion between all node pairs, attraction
/// along edges proportional to edge weight, linearly cooling displacement cap.
/// Deterministic for a fixed seed; coordinates are min-max normalized to the
/// unit square (an isolated or degenerate axis centers at 0.5).
GameGraph layout_fr(GameGraph graph, int iterations, std::uint64_t seed);

std::string graph_to_string(const GameGraph& graph, GraphFormat format);

/// Serializes to GraphML 1.0 or DOT with all node/edge attributes (group,
/// influence_size, self_giving, weight, and coordinates when present).
/// Throws IoError.
void write_graph(const GameGraph& graph, GraphFormat format, const std::filesystem::path& path);

}  // namespace tokennet
