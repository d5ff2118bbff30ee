#include <gtest/gtest.h>

#include "corpus.hpp"
#include "fjoin/indices.hpp"
#include "fjoin/parallel.hpp"

namespace fjoin {
namespace {

const Graph kP3 = generate(Family::Path, 3);
const Graph kP4 = generate(Family::Path, 4);
const Graph kC3 = generate(Family::Cycle, 3);
const Graph kK1 = generate(Family::Complete, 1);

TEST(IndicesTest, FirstZagreb) {
    EXPECT_EQ(first_zagreb(kP3), 6);
    EXPECT_EQ(first_zagreb(kC3), 12);
    EXPECT_EQ(first_zagreb(kK1), 0);
}

TEST(IndicesTest, SecondZagreb) {
    EXPECT_EQ(second_zagreb(kP4), 8);
    EXPECT_EQ(second_zagreb(kC3), 12);
    EXPECT_EQ(second_zagreb(kK1), 0);
}

TEST(IndicesTest, FIndex) {
    EXPECT_EQ(f_index(kP4), 18);
    EXPECT_EQ(f_index(kC3), 24);
    EXPECT_EQ(f_index(kK1), 0);
    for (std::size_t n = 2; n <= 20; ++n) {
        EXPECT_EQ(f_index(generate(Family::Path, n)), Integer{8 * static_cast<long>(n) - 14}) << n;
    }
    for (std::size_t n = 3; n <= 20; ++n) {
        EXPECT_EQ(f_index(generate(Family::Cycle, n)), Integer{8 * static_cast<long>(n)}) << n;
    }
}

TEST(IndicesTest, HyperZagreb) {
    EXPECT_EQ(hyper_zagreb(kP3), 18);
    EXPECT_EQ(hyper_zagreb(kC3), 48);
    EXPECT_EQ(hyper_zagreb(kK1), 0);
}

TEST(IndicesTest, Rezm) {
    EXPECT_EQ(rezm(kP3), 12);
    EXPECT_EQ(rezm(kC3), 48);
    EXPECT_EQ(rezm(generate(Family::Star, 4)), 36);
}

TEST(IndicesTest, GeneralFirstZagreb) {
    EXPECT_EQ(general_first_zagreb(kP3, 4), 18);
    EXPECT_EQ(general_first_zagreb(kC3, 4), 48);
    EXPECT_EQ(general_first_zagreb(kP4, 1), 6);
    EXPECT_THROW(general_first_zagreb(kP3, 0), DomainError);
    EXPECT_THROW(general_first_zagreb(kP3, kMaxZagrebExponent + 1), DomainError);
}

TEST(IndicesTest, InvariantsBundle) {
    EXPECT_EQ(invariants(kP3), (GraphInvariants{3, 2, 6, 4, 10, 18, 12, 18}));
    EXPECT_EQ(invariants(kP4), (GraphInvariants{4, 3, 10, 8, 18, 34, 28, 34}));
    EXPECT_EQ(invariants(kK1), (GraphInvariants{1, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(IndicesTest, SummationFormsAgreeOverCorpus) {
    for (const auto& [name, g] : testing::small_corpus()) {
        EXPECT_EQ(first_zagreb(g), first_zagreb_edge_sum(g)) << name;
        EXPECT_EQ(f_index(g), f_index_edge_sum(g)) << name;
        EXPECT_EQ(general_first_zagreb(g, 4), m4_edge_sum(g)) << name;
    }
}

TEST(IndicesTest, GeneralZagrebSpecializations) {
    for (const auto& [name, g] : testing::small_corpus()) {
        const GraphInvariants inv = invariants(g);
        EXPECT_EQ(general_first_zagreb(g, 2), inv.M1) << name;
        EXPECT_EQ(general_first_zagreb(g, 3), inv.F) << name;
        EXPECT_EQ(general_first_zagreb(g, 4), inv.M4) << name;
        EXPECT_EQ(inv.F, f_index(g.degrees())) << name;
    }
}

TEST(IndicesTest, InvariantUnderRelabeling) {
    for (const auto& [name, g] : testing::small_corpus()) {
        const Graph h = relabel(g, testing::random_permutation(g.vertex_count(), g.edge_count() + 11));
        EXPECT_EQ(invariants(h), invariants(g)) << name;
    }
}

// Large enough that every reduction takes the OpenMP path.
TEST(IndicesTest, ParallelKernelsMatchSerialReference) {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const Graph g = random_graph(60000, 200000 + seed * 1000, seed);
        ASSERT_GE(g.vertex_count(), detail::kParallelThreshold);
        EXPECT_EQ(invariants(g), serial::invariants(g));
        for (unsigned a = 1; a <= kMaxZagrebExponent; ++a) {
            EXPECT_EQ(general_first_zagreb(g, a), serial::general_first_zagreb(g, a)) << a;
        }
        EXPECT_EQ(f_index_edge_sum(g), serial::edge_power_sum(g, 3));
        EXPECT_EQ(second_zagreb(g), serial::second_zagreb(g));
        EXPECT_EQ(hyper_zagreb(g), serial::hyper_zagreb(g));
        EXPECT_EQ(rezm(g), serial::rezm(g));
    }
    for (const auto& [name, g] : testing::small_corpus()) {
        EXPECT_EQ(invariants(g), serial::invariants(g)) << name;
    }
}

TEST(IndicesTest, OverflowIsReportedNotWrapped) {
    // Centre degree 99999: 99999^8 is about 1e40, past the signed 128-bit range.
    const Graph star = generate(Family::Star, 100000);
    EXPECT_EQ(general_first_zagreb(star, 4), pow(Integer{99999}, 4) + 99999);
    EXPECT_THROW(general_first_zagreb(star, 8), OverflowError);
    EXPECT_THROW(serial::general_first_zagreb(star, 8), OverflowError);
}

}  // namespace
}  // namespace fjoin
