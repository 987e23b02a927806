#include "ff/structure.hpp"

#include <algorithm>

#include "ff/error.hpp"

namespace ff {

namespace {

inline constexpr std::uint64_t kMaxTableOrder = 1u << 12;

void require_table_scale(const FieldSpec& field) {
  if (field.order() > kMaxTableOrder) {
    throw ScaleLimitExceeded("needs q <= 4096, got " + std::to_string(field.order()));
  }
}

}  // namespace

std::vector<std::uint64_t> sorted_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> divs{1};
  std::uint64_t m = n;
  for (std::uint64_t f = 2; f * f <= m; ++f) {
    if (m % f != 0) continue;
    unsigned k = 0;
    while (m % f == 0) {
      m /= f;
      ++k;
    }
    const std::size_t base = divs.size();
    std::uint64_t pw = 1;
    for (unsigned i = 0; i < k; ++i) {
      pw *= f;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
    }
  }
  if (m > 1) {
    const std::size_t base = divs.size();
    for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * m);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    while (n % f == 0) n /= f;
    result -= result / f;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t multiplicative_order(const FieldElement& a) {
  if (a.is_zero()) throw DivisionByZero("0 has no multiplicative order");
  for (std::uint64_t n : sorted_divisors(a.field().order() - 1)) {
    if (elem_pow(a, n).is_one()) return n;
  }
  throw InternalError("a^(q-1) != 1 for " + format_element(a));
}

FieldElement find_generator(const FieldSpec& field) {
  const std::uint64_t target = field.order() - 1;
  for (std::uint64_t i = 1; i < field.order(); ++i) {
    FieldElement a = FieldElement::from_index(field, i);
    if (multiplicative_order(a) == target) return a;
  }
  throw InternalError("no generator found in GF(" + std::to_string(field.order()) + ")");
}

std::uint64_t count_generators(const FieldSpec& field) {
  require_table_scale(field);
  const std::uint64_t target = field.order() - 1;
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i < field.order(); ++i) {
    if (multiplicative_order(FieldElement::from_index(field, i)) == target) ++count;
  }
  if (count != euler_phi(target)) {
    throw InternalError("generator count " + std::to_string(count) + " != phi(q-1)");
  }
  return count;
}

GeneratorReport generator_report(const FieldSpec& field) {
  require_table_scale(field);
  std::vector<std::uint64_t> orders(field.order(), 0);
  std::uint64_t count = 0;
  std::optional<FieldElement> gen;
  for (std::uint64_t i = 1; i < field.order(); ++i) {
    FieldElement a = FieldElement::from_index(field, i);
    orders[i] = multiplicative_order(a);
    if (orders[i] == field.order() - 1) {
      ++count;
      if (!gen) gen = a;
    }
  }
  if (!gen) throw InternalError("no generator found");
  return GeneratorReport{field, *gen, std::move(orders), count};
}

StructureReport verify_ftff_c(const FieldSpec& field) {
  require_table_scale(field);
  StructureReport rep;
  const std::uint32_t p = field.characteristic().value();
  const auto zero = FieldElement::zero(field);

  // additive order exactly p: p-fold sum vanishes, no shorter one does
  rep.additive_order_p = true;
  for (std::uint64_t i = 1; i < field.order() && rep.additive_order_p; ++i) {
    const FieldElement a = FieldElement::from_index(field, i);
    FieldElement acc = a;
    for (std::uint32_t k = 2; k <= p; ++k) {
      acc = acc + a;
      const bool vanished = acc.is_zero();
      if (vanished != (k == p)) {
        rep.additive_order_p = false;
        rep.failures.push_back("additive order of " + format_element(a) + " is not " +
                               std::to_string(p));
        break;
      }
    }
  }

  // monomial basis independence: every nonzero Z_p-combination is nonzero
  std::vector<FieldElement> basis;
  const FieldElement z = FieldElement::variable(field);
  FieldElement power = FieldElement::one(field);
  for (unsigned i = 0; i < field.degree(); ++i) {
    basis.push_back(power);
    power = power * z;
  }
  rep.basis_independent = true;
  for (std::uint64_t code = 1; code < field.order(); ++code) {
    FieldElement combo = zero;
    std::uint64_t v = code;
    for (const auto& b : basis) {
      combo = combo + FieldElement::constant(field, static_cast<std::uint32_t>(v % p)) * b;
      v /= p;
    }
    if (combo.is_zero()) {
      rep.basis_independent = false;
      rep.failures.push_back("monomial basis is dependent (combination " + std::to_string(code) + ")");
      break;
    }
  }

  // cyclic multiplicative group
  try {
    rep.generator = find_generator(field);
    rep.generator_found = true;
  } catch (const InternalError& e) {
    rep.failures.push_back(e.what());
    return rep;
  }
  std::vector<bool> seen(field.order(), false);
  FieldElement g = *rep.generator;
  FieldElement acc = g;
  rep.powers_exhaust = true;
  for (std::uint64_t n = 1; n < field.order(); ++n) {
    const auto idx = acc.index();
    if (acc.is_zero() || seen[idx]) {
      rep.powers_exhaust = false;
      rep.failures.push_back("generator power " + std::to_string(n) + " repeats or vanishes");
      break;
    }
    seen[idx] = true;
    acc = acc * g;
  }
  return rep;
}

}  // namespace ff
