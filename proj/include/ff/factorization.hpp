#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ff/field_extension.hpp"
#include "ff/irreducibles.hpp"

namespace ff {

/// x^q - x over Z_p as the product of every monic irreducible whose degree
/// divides r, each exactly once.
struct BaseFactorization {
  PrimeModulus p;
  unsigned r;
  std::uint64_t q;
  /// Ascending degree, rank order within a degree.
  std::vector<IrreduciblePolynomial> factors;

  Polynomial product() const;
  /// degree -> number of factors of that degree
  std::map<unsigned, std::uint64_t> degree_histogram() const;
};

/// Roots of a Z_p polynomial inside an extension field, enumeration order.
struct LinearFactorization {
  FieldSpec field;
  Polynomial source;
  std::vector<FieldElement> roots;

  /// prod (x - root) over the field.
  FieldPolynomial product() const { return expand_linear_factors(field, roots); }
};

/// Built from the irreducible sieve, one enumeration per divisor of r; never
/// by dividing x^q - x. Requires p^r <= 2^20.
BaseFactorization factor_xq_minus_x_base(PrimeModulus p, unsigned r);

/// Every element of F as a root of x^q - x. Requires q <= 2^12.
LinearFactorization factor_xq_minus_x_extension(const FieldSpec& field);

/// All a in F with f(a) = 0, by exhaustive evaluation. Requires q <= 2^12.
std::vector<FieldElement> roots_in_field(const Polynomial& f, const FieldSpec& field);

/// The deg f distinct roots of an irreducible f whose degree divides r.
/// Throws DegreeNotDividing otherwise, InternalError if the split fails.
std::vector<FieldElement> lift_linear_split(const IrreduciblePolynomial& f, const FieldSpec& field);

/// "x^8+x = x * (x+1) * (x^3+x+1) * (x^3+x^2+1)"
std::string format_factorization(const BaseFactorization& fac);

std::vector<unsigned> divisors(unsigned n);

}  // namespace ff
