#include "fjoin/graph.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

namespace fjoin {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), degrees_(vertex_count, 0) {
    if (vertex_count > std::numeric_limits<VertexId>::max()) {
        throw DomainError("vertex count exceeds 32-bit id range");
    }
    for (Edge& e : edges_) {
        if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.v >= vertex_count) {
            throw DomainError("edge endpoint " + std::to_string(e.v) + " out of range");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw DomainError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
    }
    for (const Edge& e : edges_) {
        ++degrees_[e.u];
        ++degrees_[e.v];
    }
    assert(std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0}) ==
           static_cast<std::int64_t>(2 * edges_.size()));
}

Family parse_family(std::string_view name) {
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "complete") return Family::Complete;
    if (name == "star") return Family::Star;
    throw DomainError("unknown graph family '" + std::string(name) + "'");
}

std::string_view to_string(Family family) {
    switch (family) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
        case Family::Star: return "star";
    }
    return "?";
}

Graph generate(Family family, std::size_t n) {
    std::vector<Edge> edges;
    const auto id = [](std::size_t i) { return static_cast<VertexId>(i); };
    switch (family) {
        case Family::Path:
            if (n < 1) throw DomainError("path needs n >= 1");
            for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({id(i), id(i + 1)});
            break;
        case Family::Cycle:
            if (n < 3) throw DomainError("cycle needs n >= 3, got " + std::to_string(n));
            for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({id(i), id(i + 1)});
            edges.push_back({0, id(n - 1)});
            break;
        case Family::Complete:
            if (n < 1) throw DomainError("complete graph needs n >= 1");
            edges.reserve(n * (n - 1) / 2);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) edges.push_back({id(i), id(j)});
            break;
        case Family::Star:
            if (n < 2) throw DomainError("star needs n >= 2");
            for (std::size_t i = 1; i < n; ++i) edges.push_back({0, id(i)});
            break;
    }
    return Graph(n, std::move(edges));
}

DegreeSequence degrees(const Graph& graph) { return graph.degrees(); }

Graph relabel(const Graph& graph, std::span<const VertexId> permutation) {
    if (permutation.size() != graph.vertex_count()) {
        throw DomainError("permutation size does not match vertex count");
    }
    std::vector<Edge> edges;
    edges.reserve(graph.edge_count());
    for (const Edge& e : graph.edges()) edges.push_back({permutation[e.u], permutation[e.v]});
    return Graph(graph.vertex_count(), std::move(edges));
}

}  // namespace fjoin
