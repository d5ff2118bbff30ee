#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fjoin {

using VertexId = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Precondition violation on an operation argument.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

using DegreeSequence = std::vector<std::int64_t>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept canonical: each stored with u < v and the list sorted
/// lexicographically. Construction rejects loops, duplicates and
/// out-of-range endpoints, so every Graph value is a simple graph.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return degrees_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const DegreeSequence& degrees() const noexcept { return degrees_; }
    std::int64_t degree(VertexId v) const { return degrees_.at(v); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<Edge> edges_;
    DegreeSequence degrees_;
};

enum class Family { Path, Cycle, Complete, Star };

Family parse_family(std::string_view name);
std::string_view to_string(Family family);

/// Path P_n (n >= 1), cycle C_n (n >= 3), complete K_n (n >= 1) or star
/// K_{1,n-1} (n >= 2, centre 0). Throws DomainError below those bounds.
Graph generate(Family family, std::size_t n);

/// Parses the "n m" header + m "u v" lines format. '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string render_edge_list(const Graph& graph);

/// m distinct pairs drawn uniformly without replacement. Pure in (n, m, seed).
Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed);

DegreeSequence degrees(const Graph& graph);

/// Same graph with vertex v renamed to permutation[v].
Graph relabel(const Graph& graph, std::span<const VertexId> permutation);

}  // namespace fjoin
