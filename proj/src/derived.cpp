#include "fjoin/derived.hpp"

#include <algorithm>

namespace fjoin {

DerivedKind parse_kind(std::string_view name) {
    if (name.size() == 1) {
        switch (name[0]) {
            case 'S': case 's': return DerivedKind::S;
            case 'R': case 'r': return DerivedKind::R;
            case 'Q': case 'q': return DerivedKind::Q;
            case 'T': case 't': return DerivedKind::T;
            default: break;
        }
    }
    throw DomainError("unknown derived graph kind '" + std::string(name) + "' (expected S, R, Q or T)");
}

std::string_view to_string(DerivedKind kind) {
    switch (kind) {
        case DerivedKind::S: return "S";
        case DerivedKind::R: return "R";
        case DerivedKind::Q: return "Q";
        case DerivedKind::T: return "T";
    }
    return "?";
}

std::string_view to_string(VertexTag tag) {
    switch (tag) {
        case VertexTag::OriginalG1: return "G1";
        case VertexTag::OriginalG2: return "G2";
        case VertexTag::Inserted: return "inserted";
    }
    return "?";
}

std::size_t ProvenancedGraph::count(VertexTag tag) const {
    return static_cast<std::size_t>(std::count(tags.begin(), tags.end(), tag));
}

ProvenancedGraph derive(DerivedKind kind, const Graph& g) {
    const std::size_t n = g.vertex_count();
    const auto source = g.edges();
    const std::size_t m = source.size();
    const auto inserted = [n](std::size_t i) { return static_cast<VertexId>(n + i); };

    std::vector<Edge> edges;
    edges.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        edges.push_back({source[i].u, inserted(i)});
        edges.push_back({source[i].v, inserted(i)});
    }
    if (kind == DerivedKind::R || kind == DerivedKind::T) {
        edges.insert(edges.end(), source.begin(), source.end());
    }
    if (kind == DerivedKind::Q || kind == DerivedKind::T) {
        // Bucket edge indices by endpoint; every pair inside a bucket shares that endpoint.
        std::vector<std::vector<std::size_t>> incident(n);
        for (std::size_t i = 0; i < m; ++i) {
            incident[source[i].u].push_back(i);
            incident[source[i].v].push_back(i);
        }
        std::vector<Edge> line_edges;
        for (const auto& bucket : incident) {
            for (std::size_t a = 0; a < bucket.size(); ++a)
                for (std::size_t b = a + 1; b < bucket.size(); ++b)
                    line_edges.push_back({inserted(bucket[a]), inserted(bucket[b])});
        }
        // Two distinct simple-graph edges share at most one endpoint, so this is a no-op
        // on valid input; kept so a bad bucket can never produce a multigraph.
        std::sort(line_edges.begin(), line_edges.end());
        line_edges.erase(std::unique(line_edges.begin(), line_edges.end()), line_edges.end());
        edges.insert(edges.end(), line_edges.begin(), line_edges.end());
    }

    ProvenancedGraph out{Graph(n + m, std::move(edges)), {}, {}};
    out.tags.assign(n, VertexTag::OriginalG1);
    out.tags.resize(n + m, VertexTag::Inserted);
    out.origin_edge.resize(n + m);
    for (std::size_t i = 0; i < m; ++i) out.origin_edge[n + i] = source[i];
    return out;
}

}  // namespace fjoin
