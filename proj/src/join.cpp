#include "fjoin/join.hpp"

#include "fjoin/indices.hpp"

namespace fjoin {
namespace {

bool keeps_original_edges(DerivedKind kind) { return kind == DerivedKind::R || kind == DerivedKind::T; }
bool links_inserted(DerivedKind kind) { return kind == DerivedKind::Q || kind == DerivedKind::T; }

VertexId to_id(std::size_t i) { return static_cast<VertexId>(i); }

}  // namespace

JoinMode parse_mode(std::string_view name) {
    if (name == "vertex") return JoinMode::Vertex;
    if (name == "edge") return JoinMode::Edge;
    throw DomainError("unknown join mode '" + std::string(name) + "' (expected vertex or edge)");
}

std::string_view to_string(JoinMode mode) { return mode == JoinMode::Vertex ? "vertex" : "edge"; }

std::string to_string(OperationSpec spec) {
    return std::string(to_string(spec.kind)) + "-" + std::string(to_string(spec.mode));
}

ProvenancedGraph join(const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.vertex_count();
    const std::size_t n2 = g2.vertex_count();
    std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
    edges.reserve(g1.edge_count() + g2.edge_count() + n1 * n2);
    for (const Edge& e : g2.edges()) edges.push_back({to_id(e.u + n1), to_id(e.v + n1)});
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b) edges.push_back({to_id(a), to_id(n1 + b)});

    ProvenancedGraph out{Graph(n1 + n2, std::move(edges)), {}, {}};
    out.tags.assign(n1, VertexTag::OriginalG1);
    out.tags.resize(n1 + n2, VertexTag::OriginalG2);
    out.origin_edge.resize(n1 + n2);
    return out;
}

ProvenancedGraph f_join(OperationSpec spec, const Graph& g1, const Graph& g2) {
    ProvenancedGraph base = derive(spec.kind, g1);
    const std::size_t n1 = g1.vertex_count();
    const std::size_t m1 = g1.edge_count();
    const std::size_t offset = n1 + m1;
    const std::size_t n2 = g2.vertex_count();

    const std::size_t left_begin = spec.mode == JoinMode::Vertex ? 0 : n1;
    const std::size_t left_end = spec.mode == JoinMode::Vertex ? n1 : n1 + m1;

    std::vector<Edge> edges(base.graph.edges().begin(), base.graph.edges().end());
    edges.reserve(edges.size() + g2.edge_count() + (left_end - left_begin) * n2);
    for (const Edge& e : g2.edges()) edges.push_back({to_id(e.u + offset), to_id(e.v + offset)});
    for (std::size_t a = left_begin; a < left_end; ++a)
        for (std::size_t b = 0; b < n2; ++b) edges.push_back({to_id(a), to_id(offset + b)});

    ProvenancedGraph out{Graph(offset + n2, std::move(edges)), std::move(base.tags),
                         std::move(base.origin_edge)};
    out.tags.resize(offset + n2, VertexTag::OriginalG2);
    out.origin_edge.resize(offset + n2);
    return out;
}

Integer f_join_edge_count(OperationSpec spec, const Graph& g1, const Graph& g2) {
    const Integer n1{g1.vertex_count()};
    const Integer m1{g1.edge_count()};
    const Integer n2{g2.vertex_count()};
    const Integer m2{g2.edge_count()};

    Integer derived = 2 * m1;
    if (keeps_original_edges(spec.kind)) derived += m1;
    // Adjacent edge pairs: sum over vertices of C(d, 2) = (M1 - 2m) / 2.
    if (links_inserted(spec.kind)) {
        derived += (first_zagreb(g1) - 2 * m1) / 2;
    }
    const Integer cross = spec.mode == JoinMode::Vertex ? n1 * n2 : m1 * n2;
    return derived + m2 + cross;
}

DegreeSequence contract_degrees(OperationSpec spec, const Graph& g1, const Graph& g2) {
    const auto n1 = static_cast<std::int64_t>(g1.vertex_count());
    const auto m1 = static_cast<std::int64_t>(g1.edge_count());
    const auto n2 = static_cast<std::int64_t>(g2.vertex_count());
    const bool vertex_mode = spec.mode == JoinMode::Vertex;

    DegreeSequence out;
    out.reserve(static_cast<std::size_t>(n1 + m1 + n2));
    for (std::int64_t d : g1.degrees()) {
        const std::int64_t in_derived = keeps_original_edges(spec.kind) ? 2 * d : d;
        out.push_back(in_derived + (vertex_mode ? n2 : 0));
    }
    for (const Edge& e : g1.edges()) {
        const std::int64_t in_derived = links_inserted(spec.kind) ? g1.degree(e.u) + g1.degree(e.v) : 2;
        out.push_back(in_derived + (vertex_mode ? 0 : n2));
    }
    for (std::int64_t d : g2.degrees()) out.push_back(d + (vertex_mode ? n1 : m1));
    return out;
}

}  // namespace fjoin
