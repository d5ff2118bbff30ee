#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fjoin/indices.hpp"
#include "fjoin/join.hpp"

namespace fjoin {

/// F-index of the F-join of G1 and G2, evaluated from the factors' invariants
/// alone. Exact; throws OverflowError if a term leaves the 128-bit range.
Integer theorem_value(OperationSpec spec, const GraphInvariants& g1, const GraphInvariants& g2);

/// Operand family of a printed example: path P or cycle C.
enum class ExampleFamily { P, C };

/// One printed P/C example polynomial, e.g. group 1 case "i" is F(P_n ∨̇_S P_m).
/// n sizes the first operand and m the second.
struct FamilyExample {
    int group;             ///< 1..8 in document order
    std::string_view roman;  ///< "i".."iv"
    OperationSpec spec;
    ExampleFamily first;
    ExampleFamily second;
    int heading_theorem;   ///< theorem number printed above the example block
    int n_min;             ///< printed lower bound on n (family domain applied)
    int m_min;
    bool range_printed;    ///< false when the example states no bounds
    std::function<Integer(Integer n, Integer m)> polynomial;

    std::string id() const { return std::to_string(group) + "(" + std::string(roman) + ")"; }
};

/// All 32 printed example polynomials, in document order.
std::span<const FamilyExample> family_examples();

/// Looks up a case by group (1..8) and roman numeral; throws DomainError if absent.
const FamilyExample& family_example(int group, std::string_view roman);

/// Evaluates the printed polynomial as written. Throws DomainError when
/// (n, m) is outside the case's validity range.
Integer family_value(const FamilyExample& example, int n, int m);

/// Builds the operand graph for an example family at size k.
Graph family_graph(ExampleFamily family, int k);

struct AuditPoint {
    int n;
    int m;
    Integer family_value;
    Integer oracle_value;
};

struct AuditCase {
    const FamilyExample* example;
    int n_lo, n_hi, m_lo, m_hi;  ///< inclusive grid actually evaluated
    std::size_t points = 0;
    std::vector<AuditPoint> verified;
    std::vector<AuditPoint> mismatches;

    bool is_verified() const { return mismatches.empty(); }
};

struct AuditReport {
    std::vector<AuditCase> cases;

    std::size_t verified_count() const;
    std::size_t mismatch_count() const;
};

/// Grid window applied to both n and m; each case clips it to its own range.
struct AuditGrid {
    int lo = 1;
    int hi = 8;
};

/// Compares every printed polynomial with theorem_value on generated P/C
/// operands across the grid. Mismatches are data, not errors.
AuditReport audit_examples(AuditGrid grid = {});

}  // namespace fjoin
