#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ff/prime_field.hpp"

namespace ff {

/// Dense univariate polynomial over Z_p, little-endian: coefficient i is the
/// coefficient of x^i. Always canonical: no trailing zero coefficients, so
/// the zero polynomial has no coefficients at all.
class Polynomial {
 public:
  /// Degree reported for the zero polynomial (stands in for -infinity).
  static constexpr int kZeroDegree = -1;

  explicit Polynomial(PrimeModulus p) noexcept : p_(p) {}
  /// Coefficients are reduced mod p and trailing zeros dropped.
  Polynomial(PrimeModulus p, std::vector<std::uint32_t> coeffs);
  Polynomial(PrimeModulus p, std::initializer_list<std::uint32_t> coeffs)
      : Polynomial(p, std::vector<std::uint32_t>(coeffs)) {}

  static Polynomial constant(PrimeModulus p, std::uint32_t c) { return Polynomial(p, {c}); }
  static Polynomial monomial(PrimeModulus p, std::uint32_t c, std::size_t exponent);
  /// x - a
  static Polynomial linear_root(PrimeModulus p, std::uint32_t a);
  /// x^e - x, materialized.
  static Polynomial x_pow_minus_x(PrimeModulus p, std::uint64_t e);

  PrimeModulus modulus() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  std::span<const std::uint32_t> coeffs() const noexcept { return c_; }
  /// Coefficient of x^i; zero past the degree.
  Residue coeff(std::size_t i) const noexcept {
    return Residue(i < c_.size() ? c_[i] : 0u, p_);
  }
  Residue leading() const noexcept { return coeff(c_.empty() ? 0 : c_.size() - 1); }

  /// Coefficient vector read as a base-p integer, constant term least
  /// significant. Orders polynomials of equal degree.
  std::uint64_t rank() const noexcept;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() noexcept;

  PrimeModulus p_;
  std::vector<std::uint32_t> c_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g);
Polynomial poly_neg(const Polynomial& f);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_scale(const Polynomial& f, Residue c);
/// (quotient, remainder) with f = q*g + rem, deg rem < deg g.
std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& f, const Polynomial& g);
Polynomial poly_rem(const Polynomial& f, const Polynomial& g);
/// Monic gcd. gcd(0, 0) throws DivisionByZero.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);
Polynomial poly_monic(const Polynomial& f);
Polynomial poly_derivative(const Polynomial& f);
Residue poly_eval(const Polynomial& f, Residue a);
/// base^e mod m by square-and-multiply, reducing at every step.
Polynomial poly_powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m);
Polynomial poly_product(std::span<const Polynomial> factors, PrimeModulus p);

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return poly_add(f, g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return poly_sub(f, g); }
inline Polynomial operator-(const Polynomial& f) { return poly_neg(f); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return poly_mul(f, g); }

/// Parses `term (('+'|'-') term)*` where term = [coeff][var['^'exp]]. Any
/// single ASCII letter is accepted as the variable, but only one per text.
Polynomial poly_parse(std::string_view text, PrimeModulus p);

/// Canonical text: descending powers, no zero terms, unit coefficients
/// omitted, `+` separators, "0" for the zero polynomial.
std::string poly_format(const Polynomial& f, char var = 'x');

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  return os << poly_format(f);
}

}  // namespace ff
