#include "fjoin/closed_form.hpp"

namespace fjoin {

Integer theorem_value(OperationSpec spec, const GraphInvariants& g1, const GraphInvariants& g2) {
    const Integer& n1 = g1.n;
    const Integer& m1 = g1.m;
    const Integer& n2 = g2.n;
    const Integer& m2 = g2.m;

    // Terms shared by all vertex joins: the G2 side shifted by n1 and the n1*n2 cross block.
    const auto vertex_g2_side = [&] {
        return g2.F + 3 * n1 * g2.M1 + 6 * m2 * n1 * n1 + n1 * n2 * (n1 * n1 + n2 * n2);
    };
    // Terms shared by all edge joins: the G2 side shifted by m1.
    const auto edge_g2_side = [&] { return g2.F + 3 * m1 * g2.M1 + 6 * m1 * m1 * m2 + n2 * m1 * m1 * m1; };
    // Inserted vertices of Q/T with degree d(u)+d(v) expanded over edges.
    const auto line_terms = [&] { return g1.M4 + 3 * g1.ReZM; };

    switch (spec.kind) {
        case DerivedKind::S:
            if (spec.mode == JoinMode::Vertex) {
                return g1.F + 3 * n2 * g1.M1 + 6 * m1 * n2 * n2 + vertex_g2_side() + 8 * m1;
            }
            return g1.F + edge_g2_side() + m1 * pow(n2 + 2, 3);
        case DerivedKind::R:
            if (spec.mode == JoinMode::Vertex) {
                return 8 * g1.F + 12 * n2 * g1.M1 + 12 * m1 * n2 * n2 + vertex_g2_side() + 8 * m1;
            }
            return 8 * g1.F + edge_g2_side() + m1 * pow(n2 + 2, 3);
        case DerivedKind::Q:
            if (spec.mode == JoinMode::Vertex) {
                return g1.F + 3 * n2 * g1.M1 + line_terms() + 6 * m1 * n2 * n2 + vertex_g2_side();
            }
            return g1.F + 3 * n2 * n2 * g1.M1 + line_terms() + 3 * n2 * g1.HM + m1 * pow(n2, 3) +
                   edge_g2_side();
        case DerivedKind::T:
            if (spec.mode == JoinMode::Vertex) {
                return 8 * g1.F + 12 * n2 * g1.M1 + line_terms() + 12 * m1 * n2 * n2 + vertex_g2_side();
            }
            return 8 * g1.F + 3 * n2 * n2 * g1.M1 + line_terms() + 3 * n2 * g1.HM + m1 * pow(n2, 3) +
                   edge_g2_side();
    }
    throw DomainError("unknown operation");
}

namespace {

using P = Integer;

Integer sq(Integer x) { return x * x; }
Integer cube(Integer x) { return x * x * x; }

constexpr OperationSpec kSv{DerivedKind::S, JoinMode::Vertex};
constexpr OperationSpec kSe{DerivedKind::S, JoinMode::Edge};
constexpr OperationSpec kRv{DerivedKind::R, JoinMode::Vertex};
constexpr OperationSpec kRe{DerivedKind::R, JoinMode::Edge};
constexpr OperationSpec kQv{DerivedKind::Q, JoinMode::Vertex};
constexpr OperationSpec kQe{DerivedKind::Q, JoinMode::Edge};
constexpr OperationSpec kTv{DerivedKind::T, JoinMode::Vertex};
constexpr OperationSpec kTe{DerivedKind::T, JoinMode::Edge};

constexpr auto kP = ExampleFamily::P;
constexpr auto kC = ExampleFamily::C;

// Polynomials are kept exactly as printed, including the ones the audit
// rejects. Where no range is printed, P defaults to >= 2 and C to >= 3.
// Printed bounds below a family's domain (C_n with n >= 2) are raised to it.
std::vector<FamilyExample> build_examples() {
    return {
        {1, "i", kSv, kP, kP, 1, 2, 2, false,
         [](P n, P m) { return (m * n - 6) * (sq(m) + sq(n)) + 6 * m * n * (m + n) + 24 * m * n - 10 * m - 2 * n - 36; }},
        {1, "ii", kSv, kP, kC, 1, 2, 3, false,
         [](P n, P m) { return m * n * ((sq(m) + sq(n)) + 6 * (m + n)) - 6 * sq(m) + 24 * m * n - 10 * m + 16 * n - 22; }},
        {1, "iii", kSv, kC, kC, 1, 3, 3, false,
         [](P n, P m) { return m * n * ((sq(m) + sq(n)) + 6 * (m + n)) - 6 * sq(m) + 24 * m * n + 8 * m + 16 * n; }},
        {1, "iv", kSv, kC, kP, 1, 3, 2, false,
         [](P n, P m) { return m * n * ((sq(m) + sq(n)) + 6 * (m + n)) - 6 * sq(n) + 24 * m * n + 8 * m - 2 * n - 14; }},

        {2, "i", kSe, kP, kP, 5, 2, 2, false,
         [](P n, P m) { return (n - 1) * (cube(m + 2) + 6 * (m - 1) * (n - 1) + m * sq(n - 1)) + 12 * m * n - 4 * m - 10 * n - 10; }},
        {2, "ii", kSe, kP, kC, 5, 2, 3, false,
         [](P n, P m) { return (n - 1) * (cube(m + 2) + 6 * m * (n - 1) + m * sq(n - 1)) + 12 * m * n - 4 * m + 8 * n - 14; }},
        {2, "iii", kSe, kC, kC, 5, 3, 3, false,
         [](P n, P m) { return n * (cube(m + 2) + 6 * m * n + m * sq(n)) + 12 * m * n + 8 * m + 8 * n; }},
        {2, "iv", kSe, kC, kP, 5, 3, 2, false,
         [](P n, P m) { return n * (cube(m + 2) + 6 * n * (m - 1) + m * sq(n)) + 12 * m * n + 8 * m - 10 * n - 14; }},

        {3, "i", kRv, kP, kP, 2, 2, 2, true,
         [](P n, P m) { return m * n * (sq(m) + sq(n) + 6 * n) + 72 * m * n - 6 * sq(n) - 76 * m + 54 * n - 134; }},
        {3, "ii", kRv, kP, kC, 2, 2, 3, true,
         [](P n, P m) { return m * n * (sq(m) + sq(n) + 6 * n) + pow(m, 4) + 72 * m * n - 84 * m + 72 * n - 120; }},
        {3, "iii", kRv, kC, kC, 2, 3, 3, true,
         [](P n, P m) { return m * n * (sq(m) + sq(n) + 6 * n) + pow(m, 4) + 8 * pow(n, 4) + 72 * m * n + 8 * n; }},
        {3, "iv", kRv, kC, kP, 2, 3, 3, true,
         [](P n, P m) { return m * n * (sq(m) + sq(n)) + 6 * sq(n) * (m - 1) + 72 * m * n + 16 * m + 46 * n - 22; }},

        {4, "i", kRe, kP, kP, 6, 2, 2, true,
         [](P n, P m) { return (n - 1) * cube(m + 2) + m * cube(n - 1) + 6 * (m - 1) * sq(n - 1) + 12 * m * n - 4 * m + 46 * n - 94; }},
        {4, "ii", kRe, kP, kC, 6, 2, 3, true,
         [](P n, P m) { return (n - 1) * cube(m + 2) + m * sq(n - 1) * (n + 5) + 12 * m * n - 4 * m + 64 * n - 112; }},
        {4, "iii", kRe, kC, kC, 6, 3, 3, true,
         [](P n, P m) { return n * cube(m + 2) + m * cube(n) + 6 * m * sq(n) + 12 * m * n + 8 * m + 64 * n; }},
        {4, "iv", kRe, kC, kP, 6, 3, 2, true,
         [](P n, P m) { return n * cube(m + 2) + m * cube(n) + 6 * (m - 1) * sq(n) + 12 * m * n + 8 * m + 46 * n - 14; }},

        {5, "i", kQv, kP, kP, 3, 3, 3, true,
         [](P n, P m) { return m * n * (sq(m) + sq(n)) + 6 * sq(m) * (n - 1) + 6 * sq(n) * (m - 1) + 24 * m * n - 10 * m + 54 * n - 166; }},
        {5, "ii", kQv, kP, kC, 3, 3, 3, true,
         [](P n, P m) { return m * n * (sq(m) + sq(n)) + 6 * sq(m) * (n - 1) + 6 * sq(n) * m + 24 * m * n - 10 * m + 72 * n - 152; }},
        {5, "iii", kQv, kC, kC, 3, 3, 3, true,
         [](P n, P m) { return m * n * (sq(m) + sq(n)) + 6 * m * n * (m + n) + 24 * m * n + 8 * m + 72 * n; }},
        {5, "iv", kQv, kC, kP, 3, 3, 3, true,
         [](P n, P m) { return m * n * (sq(m) + sq(n)) + 6 * m * n * (m + n) - 6 * sq(n) + 24 * m * n + 8 * m + 54 * n - 14; }},

        {6, "i", kQe, kP, kP, 7, 4, 3, true,
         [](P n, P m) { return m * (n - 1) * (sq(n - 1) + sq(m)) + 3 * sq(m) * (4 * n - 6) + 6 * (m - 1) * sq(n - 1) + 60 * m * n - 94 * m + 54 * n - 148; }},
        {6, "ii", kQe, kP, kC, 7, 4, 3, true,
         [](P n, P m) { return m * (n - 1) * (sq(n - 1) + sq(m)) + 3 * sq(m) * (4 * n - 6) + 6 * m * sq(n - 1) + 60 * m * n - 94 * m + 72 * n - 152; }},
        {6, "iii", kQe, kC, kC, 7, 4, 3, true,
         [](P n, P m) { return m * n * (sq(m) + sq(n)) + 12 * sq(m) * n + 6 * m * sq(n) + 60 * m * n + 8 * m + 72 * n; }},
        {6, "iv", kQe, kC, kP, 7, 4, 3, true,
         [](P n, P m) { return m * n * (sq(m) + sq(n)) + 12 * sq(m) * n + 6 * m * sq(n) - 6 * sq(n) + 60 * m * n + 8 * m + 6 * n - 14; }},

        {7, "i", kTv, kP, kP, 4, 3, 3, true,
         [](P n, P m) { return m * n * (sq(m) + sq(n)) + 6 * sq(n) * (m - 1) + 12 * sq(m) * (n - 1) + 60 * m * n - 64 * m + 110 * n - 264; }},
        {7, "ii", kTv, kP, kC, 4, 3, 3, true,
         [](P n, P m) { return m * n * (sq(m) + sq(n)) + 6 * sq(n) * m + 12 * sq(m) * (n - 1) + 60 * m * n - 64 * m + 128 * n - 250; }},
        {7, "iii", kTv, kC, kC, 4, 3, 3, true,
         [](P n, P m) { return m * n * (sq(m) + sq(n)) + 6 * sq(n) * m + 12 * sq(m) * n + 60 * m * n + 8 * m + 128 * n; }},
        {7, "iv", kTv, kC, kP, 4, 3, 3, true,
         [](P n, P m) { return m * n * (sq(m) + sq(n)) + 6 * sq(n) * (m - 1) + 12 * sq(m) * n + 60 * m * n + 8 * m + 110 * n - 14; }},

        {8, "i", kTe, kP, kP, 8, 3, 2, true,
         [](P n, P m) { return cube(m) * (n - 1) + 3 * sq(m) * (4 * n - 6) + m * cube(n - 1) + 6 * (m - 1) * sq(n - 1) + 60 * m * n - 94 * m + 110 * n - 246; }},
        {8, "ii", kTe, kP, kC, 8, 3, 3, true,
         [](P n, P m) { return cube(m) * (n - 1) + 3 * sq(m) * (4 * n - 6) + m * cube(n - 1) + 6 * m * sq(n - 1) + 60 * m * n - 94 * m + 128 * n - 250; }},
        {8, "iii", kTe, kC, kC, 8, 3, 3, true,
         [](P n, P m) { return cube(m) * n + 12 * sq(m) * n + m * sq(n) * (n + 6) + 60 * m * n + 8 * m + 128 * n; }},
        {8, "iv", kTe, kC, kP, 8, 3, 3, true,
         [](P n, P m) { return cube(m) * n + 12 * sq(m) * n + m * cube(n) + 6 * sq(n) * (m - 1) + 60 * m * n + 8 * m + 110 * n - 14; }},
    };
}

}  // namespace

std::span<const FamilyExample> family_examples() {
    static const std::vector<FamilyExample> table = build_examples();
    return table;
}

const FamilyExample& family_example(int group, std::string_view roman) {
    for (const auto& ex : family_examples())
        if (ex.group == group && ex.roman == roman) return ex;
    throw DomainError("no example " + std::to_string(group) + "(" + std::string(roman) + ")");
}

Integer family_value(const FamilyExample& example, int n, int m) {
    if (n < example.n_min || m < example.m_min) {
        throw DomainError("example " + example.id() + " is stated for n >= " + std::to_string(example.n_min) +
                          ", m >= " + std::to_string(example.m_min) + "; got n = " + std::to_string(n) +
                          ", m = " + std::to_string(m));
    }
    return example.polynomial(Integer{n}, Integer{m});
}

Graph family_graph(ExampleFamily family, int k) {
    if (k < 1) throw DomainError("family size must be positive");
    return generate(family == ExampleFamily::P ? Family::Path : Family::Cycle, static_cast<std::size_t>(k));
}

}  // namespace fjoin
