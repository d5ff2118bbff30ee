#pragma once

#include "fjoin/graph.hpp"
#include "fjoin/integer.hpp"

namespace fjoin {

/// Every degree-based quantity the closed F-index formulas consume.
struct GraphInvariants {
    Integer n;
    Integer m;
    Integer M1;    ///< first Zagreb, sum of deg^2
    Integer M2;    ///< second Zagreb, sum over edges of deg(u) deg(v)
    Integer F;     ///< forgotten index, sum of deg^3
    Integer HM;    ///< hyper Zagreb, sum over edges of (deg u + deg v)^2
    Integer ReZM;  ///< sum over edges of deg(u) deg(v) (deg u + deg v)
    Integer M4;    ///< sum of deg^4

    friend bool operator==(const GraphInvariants&, const GraphInvariants&) = default;
};

inline constexpr unsigned kMaxZagrebExponent = 8;

// Vertex-sum forms. These run as OpenMP reductions on large graphs.
Integer first_zagreb(const Graph& g);
Integer f_index(const Graph& g);
Integer general_first_zagreb(const Graph& g, unsigned exponent);

// Edge-sum forms.
Integer first_zagreb_edge_sum(const Graph& g);
Integer f_index_edge_sum(const Graph& g);
Integer m4_edge_sum(const Graph& g);

Integer second_zagreb(const Graph& g);
Integer hyper_zagreb(const Graph& g);
Integer rezm(const Graph& g);

GraphInvariants invariants(const Graph& g);

/// Sum of deg^3 over an explicit degree sequence.
Integer f_index(const DegreeSequence& degrees);

namespace serial {

// Single-threaded reference kernels, kept as plain loops for cross-checking
// the parallel versions.
Integer general_first_zagreb(const Graph& g, unsigned exponent);
Integer edge_power_sum(const Graph& g, unsigned exponent);
Integer second_zagreb(const Graph& g);
Integer hyper_zagreb(const Graph& g);
Integer rezm(const Graph& g);
GraphInvariants invariants(const Graph& g);

}  // namespace serial

}  // namespace fjoin
