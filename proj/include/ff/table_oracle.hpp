#pragma once

#include <vector>

#include "ff/field_extension.hpp"
#include "ff/tables.hpp"

namespace ff {

inline constexpr unsigned kMaxOracleOrder = 7;

/// Every way to fill +/* tables on the symbols {0, 1, a, b, ...} so that the
/// field axioms hold, reduced to one representative per relabeling class of
/// the non-{0,1} symbols. Backtracking search: the addition table first
/// (Latin, commutative, associative), then the multiplication table with
/// distributivity and associativity checked as each cell is placed.
/// Requires 2 <= q <= 7.
std::vector<OperationTables> complete_tables(unsigned q);

/// Exhaustive axiom scan over complete tables. Shares nothing with the
/// incremental checks inside the search.
bool satisfies_field_axioms(const OperationTables& t);

/// True iff some relabeling fixing symbols 0 and 1 (index 0 and 1 on both
/// sides) carries both tables of `solution` onto `target`.
bool match_tables(const OperationTables& solution, const OperationTables& target);

/// match_tables against operation_tables(field). OrderMismatch if q differs.
bool match_against_field(const OperationTables& solution, const FieldSpec& field);

/// Tables of the ring Z_n (not a field for composite n), labels "0".."n-1".
OperationTables integer_ring_tables(unsigned n);

}  // namespace ff
