#include <chrono>
#include <cmath>
#include <new>
#include <sstream>

#include "fjoin/harness.hpp"

namespace fjoin {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

std::size_t edges_for_density(std::size_t n, double density) {
    if (!(density >= 0.0 && density <= 1.0)) throw DomainError("density must be in [0, 1]");
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    return static_cast<std::size_t>(std::llround(density * pairs));
}

}  // namespace

std::string BenchRecord::csv_header() { return "n1,n2,m1,m2,closed_ns,construct_ns,feasible,equal"; }

std::string BenchRecord::csv_row() const {
    std::ostringstream out;
    out << n1 << ',' << n2 << ',' << m1 << ',' << m2 << ',' << closed_ns << ',';
    if (construct_ns) out << *construct_ns;
    out << ',' << (feasible ? "true" : "false") << ',';
    if (equal) out << (*equal ? "true" : "false");
    return out.str();
}

BenchRecord bench_compare(const Graph& g1, const Graph& g2) {
    BenchRecord rec;
    rec.n1 = g1.vertex_count();
    rec.n2 = g2.vertex_count();
    rec.m1 = g1.edge_count();
    rec.m2 = g2.edge_count();

    auto start = Clock::now();
    const GraphInvariants inv1 = invariants(g1);
    const GraphInvariants inv2 = invariants(g2);
    for (OperationSpec spec : kAllSpecs) rec.closed_values.push_back(theorem_value(spec, inv1, inv2));
    rec.closed_ns = elapsed_ns(start);

    Integer largest;
    for (OperationSpec spec : kAllSpecs) largest = std::max(largest, f_join_edge_count(spec, g1, g2));
    rec.feasible = largest <= Integer{kConstructionEdgeBudget};
    if (!rec.feasible) return rec;

    try {
        start = Clock::now();
        for (OperationSpec spec : kAllSpecs) rec.constructed_values.push_back(construction_value(spec, g1, g2));
        rec.construct_ns = elapsed_ns(start);
        rec.equal = rec.constructed_values == rec.closed_values;
    } catch (const std::bad_alloc&) {
        rec.feasible = false;
        rec.constructed_values.clear();
    }
    return rec;
}

BenchRecord bench_compare(std::size_t n1, std::size_t n2, double density, std::uint64_t seed) {
    const Graph g1 = random_graph(n1, edges_for_density(n1, density), seed);
    const Graph g2 = random_graph(n2, edges_for_density(n2, density), seed ^ 0x9e3779b97f4a7c15ULL);
    return bench_compare(g1, g2);
}

}  // namespace fjoin
