#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "fjoin/graph.hpp"

namespace fjoin {

enum class DerivedKind { S, R, Q, T };

inline constexpr std::array<DerivedKind, 4> kAllKinds{DerivedKind::S, DerivedKind::R, DerivedKind::Q,
                                                      DerivedKind::T};

/// Accepts "S", "R", "Q", "T" in either case.
DerivedKind parse_kind(std::string_view name);
std::string_view to_string(DerivedKind kind);

enum class VertexTag { OriginalG1, OriginalG2, Inserted };

std::string_view to_string(VertexTag tag);

/// A graph whose vertices remember where they came from.
struct ProvenancedGraph {
    Graph graph;
    std::vector<VertexTag> tags;
    /// For Inserted vertices, the source edge they stand for.
    std::vector<std::optional<Edge>> origin_edge;

    std::size_t count(VertexTag tag) const;
};

/// Builds S(G), R(G), Q(G) or T(G).
///
/// Original vertices keep ids [0, n); the vertex inserted on the i-th edge of
/// G (in canonical sorted order) gets id n + i. Edge sets:
///   S: u-w_e and v-w_e for each edge e = uv
///   R: S plus the original edges
///   Q: S plus w_e-w_f for every pair of edges sharing an endpoint
///   T: Q plus the original edges
ProvenancedGraph derive(DerivedKind kind, const Graph& g);

}  // namespace fjoin
