#include "fjoin/harness.hpp"

#include <algorithm>
#include <random>

#include "fjoin/parallel.hpp"

namespace fjoin {
namespace {

std::size_t max_edges(std::size_t n) { return n * (n - 1) / 2; }

template <typename F>
Integer with_context(const std::string& what, F compute) {
    try {
        return compute();
    } catch (const OverflowError& e) {
        throw OverflowError(what + " (" + e.operation() + ")");
    }
}

}  // namespace

void CorpusConfig::validate() const {
    if (path_max < 1) throw DomainError("corpus: path range is empty (need max >= 1)");
    if (cycle_max < 3) throw DomainError("corpus: cycle range is empty (need max >= 3)");
    if (complete_max < 1) throw DomainError("corpus: complete range is empty (need max >= 1)");
    if (star_max < 2) throw DomainError("corpus: star range is empty (need max >= 2)");
    if (random_trials < 1) throw DomainError("corpus: random trial count must be >= 1");
    if (random_max_n < 1) throw DomainError("corpus: random graphs need max n >= 1");
}

std::size_t VerificationReport::mismatches() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.match; }));
}

std::vector<const VerificationRecord*> VerificationReport::mismatch_list() const {
    std::vector<const VerificationRecord*> out;
    for (const auto& r : records)
        if (!r.match) out.push_back(&r);
    return out;
}

Integer construction_value(OperationSpec spec, const Graph& g1, const Graph& g2) {
    return f_index(f_join(spec, g1, g2).graph);
}

VerificationReport verify_pair(const Graph& g1, const Graph& g2, const std::string& name1,
                               const std::string& name2) {
    const GraphInvariants inv1 = invariants(g1);
    const GraphInvariants inv2 = invariants(g2);
    VerificationReport report;
    report.records.reserve(kAllSpecs.size());
    for (OperationSpec spec : kAllSpecs) {
        const std::string label = to_string(spec);
        VerificationRecord rec{name1, name2, spec, {}, {}, false};
        rec.closed_form = with_context("closed form " + label, [&] { return theorem_value(spec, inv1, inv2); });
        rec.oracle = with_context("construction " + label, [&] { return construction_value(spec, g1, g2); });
        rec.match = rec.closed_form == rec.oracle;
        report.records.push_back(std::move(rec));
    }
    return report;
}

std::vector<NamedGraph> family_corpus(const CorpusConfig& config) {
    config.validate();
    std::vector<NamedGraph> out;
    const auto add = [&](Family family, std::size_t lo, std::size_t hi) {
        for (std::size_t n = lo; n <= hi; ++n) {
            out.push_back({std::string(to_string(family)) + "-" + std::to_string(n), generate(family, n)});
        }
    };
    add(Family::Path, 1, config.path_max);
    add(Family::Cycle, 3, config.cycle_max);
    add(Family::Complete, 1, config.complete_max);
    add(Family::Star, 2, config.star_max);
    return out;
}

std::pair<NamedGraph, NamedGraph> random_trial(const CorpusConfig& config, std::size_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    const auto draw = [&](const char* side) {
        std::uniform_int_distribution<std::size_t> pick_n(1, config.random_max_n);
        const std::size_t n = pick_n(rng);
        const std::size_t cap = std::min(max_edges(n), config.random_max_m.value_or(max_edges(n)));
        std::uniform_int_distribution<std::size_t> pick_m(0, cap);
        const std::size_t m = pick_m(rng);
        const std::uint64_t graph_seed = rng();
        return NamedGraph{"random-" + std::to_string(trial) + side, random_graph(n, m, graph_seed)};
    };
    NamedGraph first = draw("a");
    NamedGraph second = draw("b");
    return {std::move(first), std::move(second)};
}

VerificationReport verify_corpus(const CorpusConfig& config) {
    config.validate();
    const std::vector<NamedGraph> families = family_corpus(config);
    const std::size_t family_pairs = families.size() * families.size();
    const std::size_t work = family_pairs + config.random_trials;

    std::vector<VerificationReport> slots(work);
    detail::parallel_for(work, [&](std::size_t i) {
        if (i < family_pairs) {
            const NamedGraph& a = families[i / families.size()];
            const NamedGraph& b = families[i % families.size()];
            slots[i] = verify_pair(a.graph, b.graph, a.name, b.name);
        } else {
            auto [a, b] = random_trial(config, i - family_pairs);
            slots[i] = verify_pair(a.graph, b.graph, a.name, b.name);
        }
    });

    VerificationReport report;
    report.records.reserve(work * kAllSpecs.size());
    for (auto& slot : slots)
        for (auto& rec : slot.records) report.records.push_back(std::move(rec));
    return report;
}

}  // namespace fjoin
