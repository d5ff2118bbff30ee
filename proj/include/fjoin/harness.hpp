#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fjoin/closed_form.hpp"

namespace fjoin {

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Which graphs verify_corpus pairs up. Family sizes start at each family's
/// minimum (path 1, cycle 3, complete 1, star 2) and run to the given maximum.
struct CorpusConfig {
    std::size_t path_max = 8;
    std::size_t cycle_max = 8;
    std::size_t complete_max = 5;
    std::size_t star_max = 6;
    std::size_t random_trials = 200;
    std::size_t random_max_n = 12;
    /// Cap on edges per random graph; unset means n(n-1)/2.
    std::optional<std::size_t> random_max_m;
    std::uint64_t seed = 42;

    /// Throws DomainError on an empty range or zero trials.
    void validate() const;
};

struct VerificationRecord {
    std::string g1;
    std::string g2;
    OperationSpec spec;
    Integer closed_form;
    Integer oracle;
    bool match = false;
};

struct VerificationReport {
    std::vector<VerificationRecord> records;

    std::size_t total() const { return records.size(); }
    std::size_t mismatches() const;
    std::vector<const VerificationRecord*> mismatch_list() const;
};

/// Brute-force side: materialize the composite and sum its degree cubes.
Integer construction_value(OperationSpec spec, const Graph& g1, const Graph& g2);

/// Eight records, one per OperationSpec in canonical order. Overflow in
/// either route is rethrown naming the operation.
VerificationReport verify_pair(const Graph& g1, const Graph& g2, const std::string& name1 = "G1",
                               const std::string& name2 = "G2");

/// The named family graphs of the config, in corpus order.
std::vector<NamedGraph> family_corpus(const CorpusConfig& config);

/// The (G1, G2) pair drawn for one random trial. Depends only on (config, trial).
std::pair<NamedGraph, NamedGraph> random_trial(const CorpusConfig& config, std::size_t trial);

/// All ordered family pairs, then the random trials. Pairs run concurrently;
/// records come back ordered by pair, then by spec.
VerificationReport verify_corpus(const CorpusConfig& config = {});

inline constexpr std::size_t kConstructionEdgeBudget = 20'000'000;

struct BenchRecord {
    std::size_t n1 = 0, n2 = 0, m1 = 0, m2 = 0;
    std::int64_t closed_ns = 0;
    std::optional<std::int64_t> construct_ns;  ///< unset when the construction arm was skipped
    bool feasible = false;
    std::optional<bool> equal;  ///< unset when the construction arm was skipped
    std::vector<Integer> closed_values;       ///< one per spec, canonical order
    std::vector<Integer> constructed_values;  ///< empty when skipped

    std::string csv_row() const;
    static std::string csv_header();
};

/// Times (a) invariants + all eight theorem values against (b) building all
/// eight composites and summing degree cubes. Arm (b) is skipped when a
/// composite would exceed kConstructionEdgeBudget edges or allocation fails.
BenchRecord bench_compare(const Graph& g1, const Graph& g2);

/// Random operands with m = round(density * n(n-1)/2).
BenchRecord bench_compare(std::size_t n1, std::size_t n2, double density, std::uint64_t seed);

}  // namespace fjoin
