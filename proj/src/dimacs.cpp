#include "tdc/dimacs.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace tdc {

std::string to_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    }
    return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw DimacsError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

Graph from_dimacs(std::string_view text) {
    std::optional<std::size_t> vertex_count;
    std::size_t declared_edges = 0;
    std::vector<Edge> edges;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0] == "c") continue;
        if (tokens[0][0] == 'c' && tokens[0].size() > 1) continue;

        if (tokens[0] == "p") {
            if (vertex_count) throw DimacsError(line_no, "duplicate problem line");
            if (tokens.size() != 4 || tokens[1] != "edge") {
                throw DimacsError(line_no, "malformed header, expected 'p edge <n> <m>'");
            }
            vertex_count = parse_count(tokens[2], line_no, "vertex count");
            declared_edges = parse_count(tokens[3], line_no, "edge count");
            edges.reserve(declared_edges);
        } else if (tokens[0] == "e") {
            if (!vertex_count) throw DimacsError(line_no, "edge line before header");
            if (tokens.size() != 3) throw DimacsError(line_no, "malformed edge line");
            std::size_t u = parse_count(tokens[1], line_no, "vertex index");
            std::size_t v = parse_count(tokens[2], line_no, "vertex index");
            if (u < 1 || v < 1 || u > *vertex_count || v > *vertex_count) {
                throw DimacsError(line_no, "edge index out of range");
            }
            if (u == v) throw DimacsError(line_no, "self-loop");
            edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
        } else {
            throw DimacsError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
        }
    }
    if (!vertex_count) throw DimacsError(line_no, "missing 'p edge' header");
    if (edges.size() != declared_edges) {
        throw DimacsError(line_no, "header declares " + std::to_string(declared_edges) +
                                       " edges but " + std::to_string(edges.size()) + " were given");
    }
    return Graph::from_edges(*vertex_count, edges);
}

} // namespace tdc
