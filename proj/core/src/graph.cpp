#include "tokennet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tokennet/io.hpp"
#include "tokennet/rng.hpp"

namespace tokennet {

GameGraph build_graph(const CumulativeCounts& counts, const InfluenceScores* scores) {
    const int n = counts.n_players();
    const int final_round = counts.n_rounds();

    GameGraph graph;
    graph.nodes.reserve(static_cast<std::size_t>(n));
    for (int player = 1; player <= n; ++player) {
        GraphNode node;
        node.id = player;
        node.group = counts.group_of(player);
        node.self_giving = counts.y(player, player, final_round);
        if (scores) {
            node.influence_size = scores->std_rho[static_cast<std::size_t>(player - 1)] +
                                  scores->std_gamma[static_cast<std::size_t>(player - 1)];
        }
        graph.nodes.push_back(node);
    }
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            const int weight = counts.y(a, b, final_round) + counts.y(b, a, final_round);
            if (weight > 0) graph.edges.push_back(GraphEdge{a, b, weight});
        }
    }
    return graph;
}

GameGraph layout_fr(GameGraph graph, int iterations, std::uint64_t seed) {
    if (iterations < 1) throw Error("layout iterations must be >= 1");
    const std::size_t n = graph.nodes.size();
    if (n == 0) return graph;

    Rng rng(SeedSpec{seed, 0});
    std::vector<double> x(n);
    std::vector<double> y(n);
    for (std::size_t v = 0; v < n; ++v) {
        x[v] = rng.uniform01();
        y[v] = rng.uniform01();
    }

    const double k = std::sqrt(1.0 / static_cast<double>(n));
    std::vector<double> dx(n);
    std::vector<double> dy(n);
    for (int iteration = 0; iteration < iterations; ++iteration) {
        std::fill(dx.begin(), dx.end(), 0.0);
        std::fill(dy.begin(), dy.end(), 0.0);

        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                double delta_x = x[a] - x[b];
                double delta_y = y[a] - y[b];
                double distance = std::sqrt(delta_x * delta_x + delta_y * delta_y);
                if (distance < 1e-9) {  // coincident nodes: deterministic nudge
                    delta_x = 1e-6 * (1.0 + rng.uniform01());
                    delta_y = 1e-6 * (1.0 + rng.uniform01());
                    distance = std::sqrt(delta_x * delta_x + delta_y * delta_y);
                }
                const double repulsion = (k * k) / distance;
                dx[a] += delta_x / distance * repulsion;
                dy[a] += delta_y / distance * repulsion;
                dx[b] -= delta_x / distance * repulsion;
                dy[b] -= delta_y / distance * repulsion;
            }
        }

        for (const GraphEdge& edge : graph.edges) {
            const std::size_t a = static_cast<std::size_t>(edge.a - 1);
            const std::size_t b = static_cast<std::size_t>(edge.b - 1);
            double delta_x = x[a] - x[b];
            double delta_y = y[a] - y[b];
            double distance = std::sqrt(delta_x * delta_x + delta_y * delta_y);
            if (distance < 1e-9) continue;
            const double attraction = static_cast<double>(edge.weight) * distance * distance / k;
            dx[a] -= delta_x / distance * attraction;
            dy[a] -= delta_y / distance * attraction;
            dx[b] += delta_x / distance * attraction;
            dy[b] += delta_y / distance * attraction;
        }

        // Linear cooling of the displacement cap.
        const double temperature =
            0.1 * (1.0 - static_cast<double>(iteration) / static_cast<double>(iterations));
        for (std::size_t v = 0; v < n; ++v) {
            const double length = std::sqrt(dx[v] * dx[v] + dy[v] * dy[v]);
            if (length <= 0.0) continue;
            const double step = std::min(length, temperature);
            x[v] += dx[v] / length * step;
            y[v] += dy[v] / length * step;
        }
    }

    auto normalize = [](std::vector<double>& axis) {
        double lo = axis[0];
        double hi = axis[0];
        for (double value : axis) {
            lo = std::min(lo, value);
            hi = std::max(hi, value);
        }
        const double extent = hi - lo;
        for (double& value : axis) value = extent < 1e-12 ? 0.5 : (value - lo) / extent;
    };
    normalize(x);
    normalize(y);

    for (std::size_t v = 0; v < n; ++v) {
        graph.nodes[v].has_position = true;
        graph.nodes[v].x = x[v];
        graph.nodes[v].y = y[v];
    }
    return graph;
}

namespace {

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string to_graphml(const GameGraph& graph) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\"\n";
    out += "         xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\"\n";
    out += "         xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
           "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n";
    out += "  <key id=\"group\" for=\"node\" attr.name=\"group\" attr.type=\"int\"/>\n";
    out += "  <key id=\"influence_size\" for=\"node\" attr.name=\"influence_size\" "
           "attr.type=\"double\"/>\n";
    out += "  <key id=\"self_giving\" for=\"node\" attr.name=\"self_giving\" attr.type=\"int\"/>\n";
    out += "  <key id=\"x\" for=\"node\" attr.name=\"x\" attr.type=\"double\"/>\n";
    out += "  <key id=\"y\" for=\"node\" attr.name=\"y\" attr.type=\"double\"/>\n";
    out += "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n";
    out += "  <graph id=\"game\" edgedefault=\"undirected\">\n";
    for (const GraphNode& node : graph.nodes) {
        out += "    <node id=\"n" + std::to_string(node.id) + "\">\n";
        out += "      <data key=\"group\">" + std::to_string(node.group) + "</data>\n";
        out += "      <data key=\"influence_size\">" +
               xml_escape(format_double(node.influence_size)) + "</data>\n";
        out += "      <data key=\"self_giving\">" + std::to_string(node.self_giving) +
               "</data>\n";
        if (node.has_position) {
            out += "      <data key=\"x\">" + format_double(node.x) + "</data>\n";
            out += "      <data key=\"y\">" + format_double(node.y) + "</data>\n";
        }
        out += "    </node>\n";
    }
    for (const GraphEdge& edge : graph.edges) {
        out += "    <edge source=\"n" + std::to_string(edge.a) + "\" target=\"n" +
               std::to_string(edge.b) + "\">\n";
        out += "      <data key=\"weight\">" + std::to_string(edge.weight) + "</data>\n";
        out += "    </edge>\n";
    }
    out += "  </graph>\n";
    out += "</graphml>\n";
    return out;
}

std::string to_dot(const GameGraph& graph) {
    std::string out = "graph game {\n";
    for (const GraphNode& node : graph.nodes) {
        out += "  " + std::to_string(node.id) + " [group=" + std::to_string(node.group) +
               ", influence_size=" + format_double(node.influence_size) +
               ", self_giving=" + std::to_string(node.self_giving);
        if (node.has_position)
            out += ", pos=\"" + format_double(node.x) + "," + format_double(node.y) + "!\"";
        out += "];\n";
    }
    for (const GraphEdge& edge : graph.edges)
        out += "  " + std::to_string(edge.a) + " -- " + std::to_string(edge.b) +
               " [weight=" + std::to_string(edge.weight) + "];\n";
    out += "}\n";
    return out;
}

}  // namespace

std::string graph_to_string(const GameGraph& graph, GraphFormat format) {
    return format == GraphFormat::GraphML ? to_graphml(graph) : to_dot(graph);
}

void write_graph(const GameGraph& graph, GraphFormat format, const std::filesystem::path& path) {
    write_text_file(path, graph_to_string(graph, format));
}

}  // namespace tokennet
