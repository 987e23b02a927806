#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ff/field_extension.hpp"

namespace ff {

/// Divisors of n in ascending order, from its trial-division factorization.
std::vector<std::uint64_t> sorted_divisors(std::uint64_t n);

/// Least n >= 1 with a^n = 1, found among the divisors of q - 1.
/// DivisionByZero for 0.
std::uint64_t multiplicative_order(const FieldElement& a);

/// First element in enumeration order whose order is q - 1.
FieldElement find_generator(const FieldSpec& field);

/// Number of elements of order q - 1, counted by brute force and checked
/// against euler_phi(q - 1). Requires q <= 2^12.
std::uint64_t count_generators(const FieldSpec& field);

std::uint64_t euler_phi(std::uint64_t n);

struct GeneratorReport {
  FieldSpec field;
  FieldElement generator;
  /// order_table[i] is the order of the element with index i; 0 for zero.
  std::vector<std::uint64_t> order_table;
  std::uint64_t generator_count;
};

/// Requires q <= 2^12.
GeneratorReport generator_report(const FieldSpec& field);

/// Additive part: every nonzero element has additive order p and the
/// monomials 1, z, ..., z^(r-1) are independent over Z_p. Multiplicative
/// part: a generator exists and its powers list each nonzero element once.
struct StructureReport {
  bool additive_order_p = false;
  bool basis_independent = false;
  bool generator_found = false;
  bool powers_exhaust = false;
  std::optional<FieldElement> generator;
  std::vector<std::string> failures;

  bool additive_ok() const noexcept { return additive_order_p && basis_independent; }
  bool cyclic_ok() const noexcept { return generator_found && powers_exhaust; }
  bool passed() const noexcept { return additive_ok() && cyclic_ok(); }
};

/// Requires q <= 2^12.
StructureReport verify_ftff_c(const FieldSpec& field);

}  // namespace ff
