// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fjoin/closed_form.hpp"
#include "fjoin/harness.hpp"
#include "fjoin/indices.hpp"
#include "fjoin/join.hpp"

namespace {

using namespace fjoin;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Family graphs plus both operands of every default random trial.
std::vector<NamedGraph> corpus_graphs() {
    const CorpusConfig config;
    std::vector<NamedGraph> graphs = family_corpus(config);
    for (std::size_t t = 0; t < config.random_trials; ++t) {
        auto [a, b] = random_trial(config, t);
        graphs.push_back(std::move(a));
        graphs.push_back(std::move(b));
    }
    return graphs;
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome theorem_suite() {
    const auto start = Clock::now();
    const VerificationReport report = verify_corpus();
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << report.total() << " records, " << report.mismatches() << " mismatches, " << elapsed << " s";
    for (const VerificationRecord* r : report.mismatch_list())
        detail << "\n    " << r->g1 << " x " << r->g2 << " " << to_string(r->spec) << ": " << r->closed_form
               << " vs " << r->oracle;
    return {report.total() == (24 * 24 + 200) * 8 && report.mismatches() == 0 && elapsed < 10.0, detail.str()};
}

Outcome fixture_values() {
    const std::vector<std::int64_t> expected{860, 624, 1338, 694, 898, 878, 1376, 948};
    const VerificationReport report = verify_pair(generate(Family::Path, 3), generate(Family::Path, 4), "P3", "P4");
    std::ostringstream detail;
    bool pass = report.total() == expected.size();
    for (std::size_t i = 0; pass && i < expected.size(); ++i) {
        const VerificationRecord& r = report.records[i];
        detail << to_string(r.spec) << "=" << r.closed_form << " ";
        pass = r.match && r.closed_form == Integer(expected[i]);
    }
    return {pass, detail.str()};
}

Outcome degree_contracts() {
    const std::vector<NamedGraph> graphs = corpus_graphs();
    std::size_t checked = 0;
    std::ostringstream failures;
    auto fail = [&](const std::string& what) {
        if (failures.tellp() < 2000) failures << "\n    " << what;
    };

    for (const NamedGraph& g : graphs) {
        const Integer n = g.graph.vertex_count();
        const Integer m = g.graph.edge_count();
        const Integer extra = (first_zagreb(g.graph) - 2 * m) / 2;
        for (DerivedKind kind : kAllKinds) {
            const ProvenancedGraph d = derive(kind, g.graph);
            const Integer expected = kind == DerivedKind::S   ? 2 * m
                                     : kind == DerivedKind::R ? 3 * m
                                     : kind == DerivedKind::Q ? 2 * m + extra
                                                              : 3 * m + extra;
            if (Integer(d.graph.vertex_count()) != n + m || Integer(d.graph.edge_count()) != expected)
                fail(std::string(to_string(kind)) + "(" + g.name + ") counts");
            ++checked;
        }
    }

    // Composite degrees against the contract for every ordered family pair and
    // every random trial pair.
    const CorpusConfig config;
    const std::vector<NamedGraph> families = family_corpus(config);
    std::vector<std::pair<const Graph*, const Graph*>> pairs;
    for (const NamedGraph& a : families)
        for (const NamedGraph& b : families) pairs.emplace_back(&a.graph, &b.graph);
    for (std::size_t i = families.size(); i + 1 < graphs.size(); i += 2)
        pairs.emplace_back(&graphs[i].graph, &graphs[i + 1].graph);

    for (auto [g1, g2] : pairs) {
        for (OperationSpec spec : kAllSpecs) {
            const ProvenancedGraph c = f_join(spec, *g1, *g2);
            const std::size_t n = g1->vertex_count() + g1->edge_count() + g2->vertex_count();
            if (c.graph.vertex_count() != n || Integer(c.graph.edge_count()) != f_join_edge_count(spec, *g1, *g2) ||
                c.graph.degrees() != contract_degrees(spec, *g1, *g2))
                fail(to_string(spec) + " on n1=" + std::to_string(g1->vertex_count()) +
                     " n2=" + std::to_string(g2->vertex_count()));
            ++checked;
        }
    }
    return {failures.tellp() == 0, std::to_string(checked) + " constructions checked" + failures.str()};
}

Outcome index_identities() {
    std::size_t checked = 0;
    std::string failures;
    for (const NamedGraph& g : corpus_graphs()) {
        const Integer m1 = first_zagreb(g.graph);
        const Integer f = f_index(g.graph);
        const Integer m4 = general_first_zagreb(g.graph, 4);
        const bool ok = m1 == first_zagreb_edge_sum(g.graph) && f == f_index_edge_sum(g.graph) &&
                        m4 == m4_edge_sum(g.graph) && general_first_zagreb(g.graph, 2) == m1 &&
                        general_first_zagreb(g.graph, 3) == f;
        if (!ok) failures += " " + g.name;
        ++checked;
    }
    return {failures.empty(), std::to_string(checked) + " graphs" + (failures.empty() ? "" : "; failed:" + failures)};
}

Outcome example_audit() {
    const AuditReport report = audit_examples();
    const bool anchors = family_value(family_example(1, "i"), 3, 4) == Integer(860) &&
                         family_value(family_example(2, "i"), 3, 4) == Integer(624);
    bool pass = anchors && report.cases.size() == 32;
    std::ostringstream detail;
    detail << report.verified_count() << " verified, " << report.mismatch_count() << " mismatched";
    for (const AuditCase& c : report.cases) {
        const bool is_anchor = c.example->id() == "1(i)" || c.example->id() == "2(i)";
        if (is_anchor && !c.is_verified()) pass = false;
        if (c.verified.size() + c.mismatches.size() != c.points) pass = false;
        for (const AuditPoint& p : c.verified)
            if (p.family_value != p.oracle_value) pass = false;
        if (c.is_verified()) continue;
        const AuditPoint& first = c.mismatches.front();
        detail << "\n    " << c.example->id() << " " << to_string(c.example->spec) << ": " << c.mismatches.size()
               << "/" << c.points << " points, first (n=" << first.n << ", m=" << first.m
               << ") printed " << first.family_value << " vs " << first.oracle_value;
        for (const AuditPoint& p : c.mismatches)
            if (p.family_value == p.oracle_value) pass = false;
    }
    return {pass, detail.str()};
}

Outcome performance() {
    constexpr std::size_t kLarge = 100'000;
    const Graph a = random_graph(kLarge, 3 * kLarge, 1);
    const Graph b = random_graph(kLarge, 3 * kLarge, 2);
    const BenchRecord large = bench_compare(a, b);
    const BenchRecord small = bench_compare(300, 300, 0.05, 42);
    std::ostringstream detail;
    detail << "1e5: closed " << large.closed_ns / 1e6 << " ms, construction "
           << (large.construct_ns ? "ran" : "skipped") << "; 300: closed " << small.closed_ns / 1e6
           << " ms, construction " << (small.construct_ns ? *small.construct_ns / 1e6 : -1.0) << " ms, "
           << (small.equal.value_or(false) ? "equal" : "NOT equal");
    const bool pass = large.closed_ns < 1'000'000'000 && !large.feasible && !large.construct_ns &&
                      large.closed_values.size() == 8 && small.feasible && small.equal.value_or(false) &&
                      small.constructed_values == small.closed_values;
    return {pass, detail.str()};
}

Outcome determinism() {
    auto run_verify = [] {
        std::istringstream in;
        std::ostringstream out, err;
        const int code = cli::run({"verify", "--seed", "42"}, in, out, err);
        return std::make_pair(code, out.str());
    };
    const auto first = run_verify();
    const auto second = run_verify();
    return {first.first == 0 && !first.second.empty() && first.second == second.second,
            std::to_string(first.second.size()) + " bytes per report"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"theorem suite over the default corpus", theorem_suite},
        {"P3/P4 fixture values", fixture_values},
        {"degree contracts and edge counts", degree_contracts},
        {"index identities", index_identities},
        {"example polynomial audit", example_audit},
        {"closed form vs construction at scale", performance},
        {"verify --seed 42 determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failed += outcome.pass ? 0 : 1;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << " — "
                  << outcome.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
