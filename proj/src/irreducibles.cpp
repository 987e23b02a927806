#include "ff/irreducibles.hpp"

#include <string>

#include "ff/error.hpp"

namespace ff {

std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned e, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (v > limit / p) return std::nullopt;
    v *= p;
  }
  if (v > limit) return std::nullopt;
  return v;
}

namespace {

void require_scale(PrimeModulus p, unsigned d) {
  if (!checked_pow(p.value(), d)) {
    throw ScaleLimitExceeded(std::to_string(p.value()) + "^" + std::to_string(d) +
                             " exceeds 2^20");
  }
}

// Remainder of the monic candidate `f` modulo the monic `g`, computed in
// `scratch`; returns true when the remainder is zero.
bool divides_monic(std::span<const std::uint32_t> g, std::span<const std::uint32_t> f,
                   std::vector<std::uint32_t>& scratch, std::uint32_t p) {
  scratch.assign(f.begin(), f.end());
  const std::size_t dg = g.size() - 1;
  for (std::size_t k = scratch.size(); k-- > dg;) {
    const std::uint32_t c = scratch[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      scratch[k - dg + j] = detail::sub_mod(scratch[k - dg + j], detail::mul_mod(c, g[j], p), p);
    }
  }
  for (std::size_t i = 0; i < dg; ++i) {
    if (scratch[i] != 0) return false;
  }
  return true;
}

// Monic irreducibles of degree d in rank order, by trial division against
// `lower[k]` (the irreducibles of degree k) for every k <= d/2.
std::vector<Polynomial> scan_degree(PrimeModulus pm, unsigned d,
                                    const std::vector<std::vector<Polynomial>>& lower) {
  const std::uint32_t p = pm.value();
  const std::uint64_t count = *checked_pow(p, d);
  std::vector<Polynomial> found;
  std::vector<std::uint32_t> cand(d + 1, 0), scratch;
  cand[d] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (unsigned i = 0; i < d; ++i) {
      cand[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    bool reducible = false;
    for (unsigned k = 1; 2 * k <= d && !reducible; ++k) {
      for (const auto& g : lower[k]) {
        if (divides_monic(g.coeffs(), cand, scratch, p)) {
          reducible = true;
          break;
        }
      }
    }
    if (!reducible) found.emplace_back(pm, cand);
  }
  return found;
}

// Sieve: irreducibles of every degree in [1, max_degree], ascending.
std::vector<std::vector<Polynomial>> sieve(PrimeModulus pm, unsigned max_degree) {
  std::vector<std::vector<Polynomial>> by_degree(max_degree + 1);
  for (unsigned d = 1; d <= max_degree; ++d) by_degree[d] = scan_degree(pm, d, by_degree);
  return by_degree;
}

void require_monic_nonconstant(const Polynomial& f) {
  if (f.degree() < 1) throw ConstantPolynomial(poly_format(f) + " is constant");
  if (!f.is_monic()) throw NotMonic(poly_format(f) + " is not monic");
}

}  // namespace

std::optional<Polynomial> find_proper_factor(const Polynomial& f) {
  require_monic_nonconstant(f);
  const auto pm = f.modulus();
  const unsigned d = static_cast<unsigned>(f.degree());
  if (d == 1) return std::nullopt;
  if (d <= 3) {
    for (std::uint32_t a = 0; a < pm.value(); ++a) {
      if (poly_eval(f, Residue(a, pm)).is_zero()) return Polynomial::linear_root(pm, a);
    }
    return std::nullopt;
  }
  require_scale(pm, d / 2);
  const auto table = sieve(pm, d / 2);
  std::vector<std::uint32_t> scratch;
  for (unsigned k = 1; k <= d / 2; ++k) {
    for (const auto& g : table[k]) {
      if (divides_monic(g.coeffs(), f.coeffs(), scratch, pm.value())) return g;
    }
  }
  return std::nullopt;
}

bool is_irreducible(const Polynomial& f) { return !find_proper_factor(f).has_value(); }

IrreduciblePolynomial::IrreduciblePolynomial(Polynomial f) : f_(std::move(f)) {
  if (auto w = find_proper_factor(f_)) {
    throw ReduciblePolynomial(poly_format(f_), poly_format(*w));
  }
}

std::vector<IrreduciblePolynomial> enumerate_irreducibles(PrimeModulus p, unsigned d) {
  if (d == 0) throw ConstantPolynomial("irreducibles have degree >= 1");
  require_scale(p, d);
  auto found = scan_degree(p, d, sieve(p, d / 2));
  std::vector<IrreduciblePolynomial> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(IrreduciblePolynomial(std::move(f), IrreduciblePolynomial::Trusted{}));
  return out;
}

std::uint64_t count_irreducibles(PrimeModulus p, unsigned d) {
  return enumerate_irreducibles(p, d).size();
}

}  // namespace ff
