#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ff/irreducibles.hpp"
#include "ff/polynomial.hpp"
#include "ff/tables.hpp"

namespace ff {

/// r can reach 20 only for p = 2 under the 2^20 order guard.
inline constexpr unsigned kMaxExtensionDegree = 20;

/// GF(p^r) realized as Z_p[z]/<f(z)>. A cheap shared handle; identity is the
/// pair (p, f), the variable letter is display only.
class FieldSpec {
 public:
  PrimeModulus characteristic() const noexcept { return d_->p; }
  unsigned degree() const noexcept { return d_->r; }
  std::uint64_t order() const noexcept { return d_->q; }
  const Polynomial& modulus() const noexcept { return d_->modulus.poly(); }
  char variable() const noexcept { return d_->var; }
  const detail::Barrett& reducer() const noexcept { return d_->reducer; }

  FieldSpec with_variable(char var) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.d_ == b.d_ || a.modulus() == b.modulus();
  }

 private:
  struct Data {
    PrimeModulus p;
    unsigned r;
    std::uint64_t q;
    IrreduciblePolynomial modulus;
    char var;
    detail::Barrett reducer;
  };
  explicit FieldSpec(std::shared_ptr<const Data> d) noexcept : d_(std::move(d)) {}
  friend FieldSpec construct_field(PrimeModulus, unsigned, std::optional<Polynomial>, char);

  std::shared_ptr<const Data> d_;
};

/// Validates the modulus (monic, degree r, irreducible) or, when omitted,
/// picks the smallest-rank irreducible of degree r.
FieldSpec construct_field(PrimeModulus p, unsigned r,
                          std::optional<Polynomial> modulus = std::nullopt, char var = 'z');

/// Element of a FieldSpec stored as its canonical residue (degree < r).
class FieldElement {
 public:
  /// Reduces `rep` modulo the field modulus.
  FieldElement(FieldSpec field, const Polynomial& rep);

  static FieldElement zero(FieldSpec field) { return FieldElement(std::move(field)); }
  static FieldElement one(FieldSpec field);
  static FieldElement constant(FieldSpec field, std::uint32_t c);
  /// The class of the variable itself (z mod f). For r = 1 this is -f(0).
  static FieldElement variable(FieldSpec field);
  /// Inverse of index().
  static FieldElement from_index(FieldSpec field, std::uint64_t index);

  const FieldSpec& field() const noexcept { return field_; }
  Polynomial rep() const;
  std::span<const std::uint32_t> coeffs() const noexcept { return {c_.data(), field_.degree()}; }
  /// Coefficient vector read as a base-p integer; position in enumeration.
  std::uint64_t index() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.c_ == b.c_ && a.field_ == b.field_;
  }

 private:
  explicit FieldElement(FieldSpec field) noexcept : field_(std::move(field)) {}
  friend FieldElement elem_add(const FieldElement&, const FieldElement&);
  friend FieldElement elem_sub(const FieldElement&, const FieldElement&);
  friend FieldElement elem_neg(const FieldElement&);
  friend FieldElement elem_mul(const FieldElement&, const FieldElement&);

  FieldSpec field_;
  std::array<std::uint32_t, kMaxExtensionDegree> c_{};
};

FieldElement elem_add(const FieldElement& a, const FieldElement& b);
FieldElement elem_sub(const FieldElement& a, const FieldElement& b);
FieldElement elem_neg(const FieldElement& a);
FieldElement elem_mul(const FieldElement& a, const FieldElement& b);
/// Extended Euclid against the modulus. DivisionByZero for 0.
FieldElement elem_inv(const FieldElement& a);
FieldElement elem_pow(const FieldElement& a, std::uint64_t e);
/// a -> a^p
FieldElement frobenius(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return elem_add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return elem_sub(a, b); }
inline FieldElement operator-(const FieldElement& a) { return elem_neg(a); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return elem_mul(a, b); }

/// Residue text in the field's variable, e.g. "z^2+1".
std::string format_element(const FieldElement& a);

/// All q elements in index order: 0, 1, ..., p-1, z, z+1, ...
std::vector<FieldElement> enumerate_elements(const FieldSpec& field);

/// Indexed by enumerate_elements. Requires q <= 256.
OperationTables operation_tables(const FieldSpec& field);

/// Polynomial with coefficients in a field, little-endian, possibly with
/// trailing zeros trimmed by the producers below.
using FieldPolynomial = std::vector<FieldElement>;

/// Embeds a Z_p[x] polynomial coefficientwise into F[x].
FieldPolynomial lift_polynomial(const Polynomial& f, const FieldSpec& field);
/// Horner evaluation of f (over Z_p) at a point of the field.
FieldElement eval_in_field(const Polynomial& f, const FieldElement& a);
/// prod (x - a_i) over the field.
FieldPolynomial expand_linear_factors(const FieldSpec& field, std::span<const FieldElement> roots);

}  // namespace ff
