#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

#include "fjoin/graph.hpp"

namespace fjoin {
namespace {

// Strips CR and '#' comments, then splits on blanks and tabs.
std::vector<std::string_view> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
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

std::uint64_t to_count(std::string_view token, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "expected a nonnegative integer, got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    bool have_header = false;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::vector<Edge> edges;
    std::set<std::pair<VertexId, VertexId>> seen;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected two fields, got " + std::to_string(tokens.size()));
        }
        std::uint64_t a = to_count(tokens[0], line_no);
        std::uint64_t b = to_count(tokens[1], line_no);
        if (!have_header) {
            if (a > std::numeric_limits<VertexId>::max()) {
                throw ParseError(line_no, "vertex count too large");
            }
            if (a > 0 && b > a * (a - 1) / 2) {
                throw ParseError(line_no, "edge count exceeds n(n-1)/2");
            }
            if (a == 0 && b > 0) throw ParseError(line_no, "edges declared on an empty vertex set");
            n = a;
            m = b;
            have_header = true;
            edges.reserve(m);
            continue;
        }
        if (edges.size() == m) {
            throw ParseError(line_no, "more than the declared " + std::to_string(m) + " edges");
        }
        if (a >= n || b >= n) {
            throw ParseError(line_no, "vertex id out of range (n = " + std::to_string(n) + ")");
        }
        if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        auto u = static_cast<VertexId>(std::min(a, b));
        auto v = static_cast<VertexId>(std::max(a, b));
        if (!seen.emplace(u, v).second) {
            throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
        edges.push_back({u, v});
    }
    if (!have_header) throw ParseError(line_no + 1, "missing \"n m\" header");
    if (edges.size() != m) {
        throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                          std::to_string(edges.size()));
    }
    return Graph(n, std::move(edges));
}

std::string render_edge_list(const Graph& graph) {
    std::ostringstream out;
    out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
    for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace fjoin
