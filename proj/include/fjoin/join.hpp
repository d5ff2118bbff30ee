#pragma once

#include <array>
#include <string>
#include <string_view>

#include "fjoin/derived.hpp"
#include "fjoin/integer.hpp"

namespace fjoin {

enum class JoinMode { Vertex, Edge };

/// Accepts "vertex" or "edge".
JoinMode parse_mode(std::string_view name);
std::string_view to_string(JoinMode mode);

/// Identifies one of the eight F-join operations (and its closed formula).
struct OperationSpec {
    DerivedKind kind = DerivedKind::S;
    JoinMode mode = JoinMode::Vertex;

    friend constexpr bool operator==(OperationSpec, OperationSpec) = default;
};

/// Canonical order: S, R, Q, T; vertex before edge within each kind.
inline constexpr std::array<OperationSpec, 8> kAllSpecs{{
    {DerivedKind::S, JoinMode::Vertex}, {DerivedKind::S, JoinMode::Edge},
    {DerivedKind::R, JoinMode::Vertex}, {DerivedKind::R, JoinMode::Edge},
    {DerivedKind::Q, JoinMode::Vertex}, {DerivedKind::Q, JoinMode::Edge},
    {DerivedKind::T, JoinMode::Vertex}, {DerivedKind::T, JoinMode::Edge},
}};

std::string to_string(OperationSpec spec);

/// G1 ∨ G2: disjoint union plus all n1*n2 cross edges. G2 ids are offset by n1.
ProvenancedGraph join(const Graph& g1, const Graph& g2);

/// Vertex or edge F-join of G1 and G2.
///
/// Layout: [0, n1) original G1 vertices, [n1, n1+m1) inserted vertices,
/// [n1+m1, n1+m1+n2) G2. Vertex mode joins every original G1 vertex to every
/// G2 vertex; edge mode joins every inserted vertex to every G2 vertex. The
/// edge T-join follows the same rule (inserted vertices only).
ProvenancedGraph f_join(OperationSpec spec, const Graph& g1, const Graph& g2);

/// Number of edges f_join(spec, g1, g2) would have, without building it.
Integer f_join_edge_count(OperationSpec spec, const Graph& g1, const Graph& g2);

/// Degree of every composite vertex predicted from the tag case split alone,
/// computed from G1 and G2 without materializing the composite.
DegreeSequence contract_degrees(OperationSpec spec, const Graph& g1, const Graph& g2);

}  // namespace fjoin
