#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ff/polynomial.hpp"

namespace ff {

/// Largest p^d the exhaustive routines accept.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/// p^e, or nullopt when it exceeds `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned e,
                                         std::uint64_t limit = kMaxFieldOrder);

/// A monic polynomial of degree >= 1 known to be irreducible over Z_p.
class IrreduciblePolynomial {
 public:
  /// Validates with is_irreducible; throws ReduciblePolynomial otherwise.
  explicit IrreduciblePolynomial(Polynomial f);

  const Polynomial& poly() const noexcept { return f_; }
  int degree() const noexcept { return f_.degree(); }
  PrimeModulus modulus() const noexcept { return f_.modulus(); }

  friend bool operator==(const IrreduciblePolynomial&, const IrreduciblePolynomial&) = default;

 private:
  struct Trusted {};
  IrreduciblePolynomial(Polynomial f, Trusted) noexcept : f_(std::move(f)) {}
  friend std::vector<IrreduciblePolynomial> enumerate_irreducibles(PrimeModulus, unsigned);

  Polynomial f_;
};

/// Smallest-rank monic factor of degree in [1, deg f - 1], if any.
/// Requires f monic with deg f >= 1.
std::optional<Polynomial> find_proper_factor(const Polynomial& f);

/// Root scan for degree <= 3, trial division by the monic irreducibles of
/// degree <= deg/2 otherwise. Throws NotMonic / ConstantPolynomial.
bool is_irreducible(const Polynomial& f);

/// All monic irreducibles of degree exactly d, ordered by rank() (the
/// coefficient vector as a base-p integer). Requires p^d <= 2^20.
std::vector<IrreduciblePolynomial> enumerate_irreducibles(PrimeModulus p, unsigned d);

std::uint64_t count_irreducibles(PrimeModulus p, unsigned d);

}  // namespace ff
