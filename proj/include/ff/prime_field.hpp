#pragma once

#include <cstdint>
#include <ostream>

namespace ff {

/// A validated prime p with 2 <= p < 2^16. Products of two residues fit in
/// 32 bits.
class PrimeModulus {
 public:
  static constexpr std::uint32_t kMaxExclusive = 1u << 16;

  std::uint32_t value() const noexcept { return p_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  explicit constexpr PrimeModulus(std::uint32_t p) noexcept : p_(p) {}
  friend PrimeModulus check_prime(std::uint64_t n);

  std::uint32_t p_;
};

/// Deterministic trial division. Throws NotPrime for composite n (and for
/// n < 2), ScaleLimitExceeded for n >= 2^16.
PrimeModulus check_prime(std::uint64_t n);

bool is_prime(std::uint64_t n) noexcept;

/// Element of Z_p in canonical form [0, p).
class Residue {
 public:
  Residue(std::uint64_t value, PrimeModulus p) noexcept
      : value_(static_cast<std::uint32_t>(value % p.value())), p_(p) {}

  /// Reduces a signed integer into [0, p).
  static Residue from_signed(std::int64_t value, PrimeModulus p) noexcept;

  std::uint32_t value() const noexcept { return value_; }
  PrimeModulus modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::uint32_t value_;
  PrimeModulus p_;
};

Residue residue_add(Residue a, Residue b);
Residue residue_sub(Residue a, Residue b);
Residue residue_neg(Residue a) noexcept;
Residue residue_mul(Residue a, Residue b);
/// Inverse by the extended Euclidean algorithm; DivisionByZero for 0.
Residue residue_inv(Residue a);
Residue residue_pow(Residue a, std::uint64_t e) noexcept;

inline Residue operator+(Residue a, Residue b) { return residue_add(a, b); }
inline Residue operator-(Residue a, Residue b) { return residue_sub(a, b); }
inline Residue operator-(Residue a) noexcept { return residue_neg(a); }
inline Residue operator*(Residue a, Residue b) { return residue_mul(a, b); }

inline std::ostream& operator<<(std::ostream& os, Residue a) { return os << a.value(); }

namespace detail {

// Raw helpers on canonical values; callers guarantee a, b < p.
inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

/// x mod p for 64-bit x via a precomputed reciprocal.
class Barrett {
 public:
  explicit Barrett(std::uint32_t p) noexcept
      : p_(p), m_(static_cast<std::uint64_t>(~std::uint64_t{0} / p)) {}

  std::uint32_t reduce(std::uint64_t x) const noexcept {
    const auto quot = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
    std::uint64_t r = x - quot * p_;
    while (r >= p_) r -= p_;
    return static_cast<std::uint32_t>(r);
  }

 private:
  std::uint64_t p_;
  std::uint64_t m_;
};

}  // namespace detail

}  // namespace ff
