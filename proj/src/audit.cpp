#include <algorithm>

#include "fjoin/closed_form.hpp"
#include "fjoin/parallel.hpp"

namespace fjoin {

std::size_t AuditReport::verified_count() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const AuditCase& c) { return c.is_verified(); }));
}

std::size_t AuditReport::mismatch_count() const { return cases.size() - verified_count(); }

AuditReport audit_examples(AuditGrid grid) {
    const auto examples = family_examples();
    AuditReport report;
    report.cases.resize(examples.size());

    // Each case writes only its own slot, so the report order is the table order
    // whatever order the workers finish in.
    detail::parallel_for(examples.size(), [&](std::size_t i) {
        const FamilyExample& ex = examples[i];
        AuditCase& out = report.cases[i];
        out.example = &ex;
        out.n_lo = std::max(grid.lo, ex.n_min);
        out.m_lo = std::max(grid.lo, ex.m_min);
        out.n_hi = grid.hi;
        out.m_hi = grid.hi;
        for (int n = out.n_lo; n <= out.n_hi; ++n) {
            const GraphInvariants first = invariants(family_graph(ex.first, n));
            for (int m = out.m_lo; m <= out.m_hi; ++m) {
                const GraphInvariants second = invariants(family_graph(ex.second, m));
                AuditPoint point{n, m, family_value(ex, n, m), theorem_value(ex.spec, first, second)};
                ++out.points;
                (point.family_value == point.oracle_value ? out.verified : out.mismatches).push_back(point);
            }
        }
    });
    return report;
}

}  // namespace fjoin
