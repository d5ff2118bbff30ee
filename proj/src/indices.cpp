#include "fjoin/indices.hpp"

#include <stdexcept>

#include "fjoin/parallel.hpp"

namespace fjoin {
namespace {

void check_exponent(unsigned exponent) {
    if (exponent < 1 || exponent > kMaxZagrebExponent) {
        throw DomainError("Zagreb exponent must be in [1, " + std::to_string(kMaxZagrebExponent) +
                          "], got " + std::to_string(exponent));
    }
}

Integer vertex_power_sum(const DegreeSequence& degrees, unsigned exponent) {
    return detail::parallel_sum(degrees.size(),
                                [&](std::size_t v) { return pow(Integer{degrees[v]}, exponent); });
}

// Sum over edges of deg(u)^(k-1) + deg(v)^(k-1), which equals the vertex sum of deg^k.
Integer edge_power_sum(const Graph& g, unsigned exponent) {
    const auto edges = g.edges();
    const auto& d = g.degrees();
    return detail::parallel_sum(edges.size(), [&](std::size_t i) {
        return pow(Integer{d[edges[i].u]}, exponent - 1) + pow(Integer{d[edges[i].v]}, exponent - 1);
    });
}

template <typename Term>
Integer edge_sum(const Graph& g, Term term) {
    const auto edges = g.edges();
    const auto& d = g.degrees();
    return detail::parallel_sum(edges.size(), [&](std::size_t i) {
        return term(Integer{d[edges[i].u]}, Integer{d[edges[i].v]});
    });
}

// The vertex and edge forms of M1, F and M4 must agree; checked in debug and
// FJOIN_CROSS_CHECK builds.
void cross_check([[maybe_unused]] Integer vertex_form, [[maybe_unused]] Integer edge_form,
                 [[maybe_unused]] const char* name) {
#if defined(FJOIN_CROSS_CHECK) || !defined(NDEBUG)
    if (vertex_form != edge_form) {
        throw std::logic_error(std::string(name) + ": vertex-sum and edge-sum forms disagree");
    }
#endif
}

struct VertexSums {
    Integer m1, f, m4;
    VertexSums& operator+=(const VertexSums& o) {
        m1 += o.m1;
        f += o.f;
        m4 += o.m4;
        return *this;
    }
};

struct EdgeSums {
    Integer m2, hm, rezm;
    EdgeSums& operator+=(const EdgeSums& o) {
        m2 += o.m2;
        hm += o.hm;
        rezm += o.rezm;
        return *this;
    }
};

}  // namespace

Integer first_zagreb(const Graph& g) {
    Integer value = vertex_power_sum(g.degrees(), 2);
    cross_check(value, edge_power_sum(g, 2), "M1");
    return value;
}

Integer f_index(const Graph& g) {
    Integer value = vertex_power_sum(g.degrees(), 3);
    cross_check(value, edge_power_sum(g, 3), "F");
    return value;
}

Integer f_index(const DegreeSequence& degrees) { return vertex_power_sum(degrees, 3); }

Integer general_first_zagreb(const Graph& g, unsigned exponent) {
    check_exponent(exponent);
    Integer value = vertex_power_sum(g.degrees(), exponent);
    if (exponent == 4) cross_check(value, edge_power_sum(g, 4), "M4");
    return value;
}

Integer first_zagreb_edge_sum(const Graph& g) { return edge_power_sum(g, 2); }
Integer f_index_edge_sum(const Graph& g) { return edge_power_sum(g, 3); }
Integer m4_edge_sum(const Graph& g) { return edge_power_sum(g, 4); }

Integer second_zagreb(const Graph& g) {
    return edge_sum(g, [](Integer du, Integer dv) { return du * dv; });
}

Integer hyper_zagreb(const Graph& g) {
    return edge_sum(g, [](Integer du, Integer dv) { return (du + dv) * (du + dv); });
}

Integer rezm(const Graph& g) {
    return edge_sum(g, [](Integer du, Integer dv) { return du * dv * (du + dv); });
}

GraphInvariants invariants(const Graph& g) {
    const auto& d = g.degrees();
    const auto edges = g.edges();

    const auto vs = detail::parallel_reduce<VertexSums>(d.size(), [&](VertexSums& acc, std::size_t v) {
        const Integer x{d[v]};
        const Integer x2 = x * x;
        acc.m1 += x2;
        acc.f += x2 * x;
        acc.m4 += x2 * x2;
    });
    const auto es = detail::parallel_reduce<EdgeSums>(edges.size(), [&](EdgeSums& acc, std::size_t i) {
        const Integer du{d[edges[i].u]};
        const Integer dv{d[edges[i].v]};
        const Integer prod = du * dv;
        const Integer sum = du + dv;
        acc.m2 += prod;
        acc.hm += sum * sum;
        acc.rezm += prod * sum;
    });

    return GraphInvariants{
        .n = Integer{g.vertex_count()},
        .m = Integer{g.edge_count()},
        .M1 = vs.m1,
        .M2 = es.m2,
        .F = vs.f,
        .HM = es.hm,
        .ReZM = es.rezm,
        .M4 = vs.m4,
    };
}

namespace serial {

Integer general_first_zagreb(const Graph& g, unsigned exponent) {
    check_exponent(exponent);
    Integer sum;
    for (std::int64_t d : g.degrees()) sum += pow(Integer{d}, exponent);
    return sum;
}

Integer edge_power_sum(const Graph& g, unsigned exponent) {
    check_exponent(exponent);
    Integer sum;
    for (const Edge& e : g.edges()) {
        sum += pow(Integer{g.degree(e.u)}, exponent - 1) + pow(Integer{g.degree(e.v)}, exponent - 1);
    }
    return sum;
}

Integer second_zagreb(const Graph& g) {
    Integer sum;
    for (const Edge& e : g.edges()) sum += Integer{g.degree(e.u)} * g.degree(e.v);
    return sum;
}

Integer hyper_zagreb(const Graph& g) {
    Integer sum;
    for (const Edge& e : g.edges()) sum += pow(Integer{g.degree(e.u) + g.degree(e.v)}, 2);
    return sum;
}

Integer rezm(const Graph& g) {
    Integer sum;
    for (const Edge& e : g.edges()) {
        const Integer du{g.degree(e.u)};
        const Integer dv{g.degree(e.v)};
        sum += du * dv * (du + dv);
    }
    return sum;
}

GraphInvariants invariants(const Graph& g) {
    return GraphInvariants{
        .n = Integer{g.vertex_count()},
        .m = Integer{g.edge_count()},
        .M1 = serial::general_first_zagreb(g, 2),
        .M2 = serial::second_zagreb(g),
        .F = serial::general_first_zagreb(g, 3),
        .HM = serial::hyper_zagreb(g),
        .ReZM = serial::rezm(g),
        .M4 = serial::general_first_zagreb(g, 4),
    };
}

}  // namespace serial

}  // namespace fjoin
