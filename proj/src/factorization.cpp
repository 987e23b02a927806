#include "ff/factorization.hpp"

#include <algorithm>
#include <string>

#include "ff/error.hpp"

namespace ff {

namespace {

inline constexpr std::uint64_t kMaxRootScanOrder = 1u << 12;

void require_root_scan(const FieldSpec& field) {
  if (field.order() > kMaxRootScanOrder) {
    throw ScaleLimitExceeded("root enumeration needs q <= 4096, got " +
                             std::to_string(field.order()));
  }
}

}  // namespace

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

Polynomial BaseFactorization::product() const {
  Polynomial acc = Polynomial::constant(p, 1);
  for (const auto& f : factors) acc = acc * f.poly();
  return acc;
}

std::map<unsigned, std::uint64_t> BaseFactorization::degree_histogram() const {
  std::map<unsigned, std::uint64_t> h;
  for (const auto& f : factors) ++h[static_cast<unsigned>(f.degree())];
  return h;
}

BaseFactorization factor_xq_minus_x_base(PrimeModulus p, unsigned r) {
  if (r == 0) throw DegreeMismatch("exponent r must be at least 1");
  const auto q = checked_pow(p.value(), r);
  if (!q) throw ScaleLimitExceeded("p^r exceeds 2^20");
  BaseFactorization out{p, r, *q, {}};
  for (unsigned d : divisors(r)) {
    auto irr = enumerate_irreducibles(p, d);
    out.factors.insert(out.factors.end(), irr.begin(), irr.end());
  }
  return out;
}

std::vector<FieldElement> roots_in_field(const Polynomial& f, const FieldSpec& field) {
  require_root_scan(field);
  if (f.is_zero()) throw DivisionByZero("the zero polynomial vanishes everywhere");
  std::vector<FieldElement> roots;
  for (std::uint64_t i = 0; i < field.order(); ++i) {
    FieldElement a = FieldElement::from_index(field, i);
    if (eval_in_field(f, a).is_zero()) roots.push_back(std::move(a));
  }
  return roots;
}

LinearFactorization factor_xq_minus_x_extension(const FieldSpec& field) {
  require_root_scan(field);
  Polynomial source = Polynomial::x_pow_minus_x(field.characteristic(), field.order());
  // a^q = a holds for every element; test it rather than assume it
  std::vector<FieldElement> roots;
  roots.reserve(field.order());
  for (std::uint64_t i = 0; i < field.order(); ++i) {
    FieldElement a = FieldElement::from_index(field, i);
    if (elem_pow(a, field.order()) == a) roots.push_back(std::move(a));
  }
  return LinearFactorization{field, std::move(source), std::move(roots)};
}

std::vector<FieldElement> lift_linear_split(const IrreduciblePolynomial& f, const FieldSpec& field) {
  const auto d = static_cast<unsigned>(f.degree());
  if (field.degree() % d != 0) {
    throw DegreeNotDividing("degree " + std::to_string(d) + " does not divide " +
                            std::to_string(field.degree()));
  }
  auto roots = roots_in_field(f.poly(), field);
  if (roots.size() != d || expand_linear_factors(field, roots) != lift_polynomial(f.poly(), field)) {
    throw InternalError(poly_format(f.poly()) + " failed to split into " + std::to_string(d) +
                        " linear factors");
  }
  return roots;
}

std::string format_factorization(const BaseFactorization& fac) {
  std::string out = poly_format(Polynomial::x_pow_minus_x(fac.p, fac.q)) + " =";
  bool first = true;
  for (const auto& f : fac.factors) {
    out += first ? " " : " * ";
    first = false;
    const std::string s = poly_format(f.poly());
    const bool single_term = f.degree() == 0 || std::count(s.begin(), s.end(), '+') == 0;
    out += single_term ? s : "(" + s + ")";
  }
  return out;
}

}  // namespace ff
