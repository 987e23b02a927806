#include "ff/prime_field.hpp"

#include <string>

#include "ff/error.hpp"

namespace ff {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus check_prime(std::uint64_t n) {
  if (n >= PrimeModulus::kMaxExclusive) {
    throw ScaleLimitExceeded("prime modulus " + std::to_string(n) + " must be below 65536");
  }
  if (!is_prime(n)) throw NotPrime(std::to_string(n) + " is not prime");
  return PrimeModulus(static_cast<std::uint32_t>(n));
}

Residue Residue::from_signed(std::int64_t value, PrimeModulus p) noexcept {
  const auto m = static_cast<std::int64_t>(p.value());
  std::int64_t v = value % m;
  if (v < 0) v += m;
  return Residue(static_cast<std::uint64_t>(v), p);
}

namespace {

void require_same(Residue a, Residue b) {
  if (a.modulus() != b.modulus()) {
    throw ModulusMismatch("residues mod " + std::to_string(a.modulus().value()) + " and mod " +
                          std::to_string(b.modulus().value()));
  }
}

}  // namespace

Residue residue_add(Residue a, Residue b) {
  require_same(a, b);
  const auto p = a.modulus();
  return Residue(detail::add_mod(a.value(), b.value(), p.value()), p);
}

Residue residue_sub(Residue a, Residue b) {
  require_same(a, b);
  const auto p = a.modulus();
  return Residue(detail::sub_mod(a.value(), b.value(), p.value()), p);
}

Residue residue_neg(Residue a) noexcept {
  const auto p = a.modulus();
  return Residue(detail::sub_mod(0, a.value(), p.value()), p);
}

Residue residue_mul(Residue a, Residue b) {
  require_same(a, b);
  const auto p = a.modulus();
  return Residue(detail::mul_mod(a.value(), b.value(), p.value()), p);
}

Residue residue_inv(Residue a) {
  const auto p = a.modulus();
  return Residue(detail::inv_mod(a.value(), p.value()), p);
}

Residue residue_pow(Residue a, std::uint64_t e) noexcept {
  const auto p = a.modulus().value();
  std::uint32_t result = 1 % p;
  std::uint32_t base = a.value();
  while (e > 0) {
    if (e & 1) result = detail::mul_mod(result, base, p);
    base = detail::mul_mod(base, base, p);
    e >>= 1;
  }
  return Residue(result, a.modulus());
}

namespace detail {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DivisionByZero("0 has no inverse mod " + std::to_string(p));
  std::int64_t r0 = p, r1 = a % p;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t t = r0 - quot * r1;
    r0 = r1;
    r1 = t;
    t = s0 - quot * s1;
    s0 = s1;
    s1 = t;
  }
  // r0 == 1 since p is prime
  s0 %= static_cast<std::int64_t>(p);
  if (s0 < 0) s0 += p;
  return static_cast<std::uint32_t>(s0);
}

}  // namespace detail

}  // namespace ff
