#include "ff/field_extension.hpp"

#include <string>

#include "ff/error.hpp"

namespace ff {

FieldSpec FieldSpec::with_variable(char var) const {
  auto d = std::make_shared<Data>(*d_);
  d->var = var;
  return FieldSpec(std::move(d));
}

FieldSpec construct_field(PrimeModulus p, unsigned r, std::optional<Polynomial> modulus,
                          char var) {
  if (r == 0) throw DegreeMismatch("extension degree must be at least 1");
  const auto q = checked_pow(p.value(), r);
  if (!q) {
    throw ScaleLimitExceeded("field order " + std::to_string(p.value()) + "^" +
                             std::to_string(r) + " exceeds 2^20");
  }
  if (!modulus) {
    auto all = enumerate_irreducibles(p, r);
    return FieldSpec(std::make_shared<FieldSpec::Data>(
        FieldSpec::Data{p, r, *q, std::move(all.front()), var, detail::Barrett(p.value())}));
  }
  if (modulus->modulus() != p) {
    throw ModulusMismatch("modulus is over Z_" + std::to_string(modulus->modulus().value()) +
                          ", field over Z_" + std::to_string(p.value()));
  }
  if (modulus->degree() != static_cast<int>(r)) {
    throw DegreeMismatch(poly_format(*modulus, var) + " has degree " +
                         std::to_string(modulus->degree()) + ", expected " + std::to_string(r));
  }
  if (!modulus->is_monic()) throw NotMonic(poly_format(*modulus, var) + " is not monic");
  std::optional<Polynomial> witness = find_proper_factor(*modulus);
  if (witness) throw ReduciblePolynomial(poly_format(*modulus, var), poly_format(*witness, var));
  return FieldSpec(std::make_shared<FieldSpec::Data>(
      FieldSpec::Data{p, r, *q, IrreduciblePolynomial(std::move(*modulus)), var,
                      detail::Barrett(p.value())}));
}

// ---------------------------------------------------------------------------

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch("elements of GF(" + std::to_string(a.field().order()) + ") mod " +
                        poly_format(a.field().modulus(), a.field().variable()) + " and mod " +
                        poly_format(b.field().modulus(), b.field().variable()));
  }
}

}  // namespace

FieldElement::FieldElement(FieldSpec field, const Polynomial& rep) : field_(std::move(field)) {
  if (rep.modulus() != field_.characteristic()) {
    throw ModulusMismatch("representative over a different Z_p");
  }
  const Polynomial reduced = poly_rem(rep, field_.modulus());
  const auto c = reduced.coeffs();
  std::copy(c.begin(), c.end(), c_.begin());
}

FieldElement FieldElement::one(FieldSpec field) { return constant(std::move(field), 1); }

FieldElement FieldElement::constant(FieldSpec field, std::uint32_t c) {
  FieldElement e(std::move(field));
  e.c_[0] = c % e.field_.characteristic().value();
  return e;
}

FieldElement FieldElement::variable(FieldSpec field) {
  const auto p = field.characteristic();
  return FieldElement(field, Polynomial::monomial(p, 1, 1));
}

FieldElement FieldElement::from_index(FieldSpec field, std::uint64_t index) {
  FieldElement e(std::move(field));
  const std::uint32_t p = e.field_.characteristic().value();
  for (unsigned i = 0; i < e.field_.degree(); ++i) {
    e.c_[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return e;
}

Polynomial FieldElement::rep() const {
  return Polynomial(field_.characteristic(),
                    std::vector<std::uint32_t>(c_.begin(), c_.begin() + field_.degree()));
}

std::uint64_t FieldElement::index() const noexcept {
  const std::uint64_t p = field_.characteristic().value();
  std::uint64_t v = 0;
  for (unsigned i = field_.degree(); i-- > 0;) v = v * p + c_[i];
  return v;
}

bool FieldElement::is_zero() const noexcept {
  for (unsigned i = 0; i < field_.degree(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

bool FieldElement::is_one() const noexcept {
  if (c_[0] != 1) return false;
  for (unsigned i = 1; i < field_.degree(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

FieldElement elem_add(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  FieldElement out(a.field_);
  const auto p = a.field_.characteristic().value();
  for (unsigned i = 0; i < a.field_.degree(); ++i) out.c_[i] = detail::add_mod(a.c_[i], b.c_[i], p);
  return out;
}

FieldElement elem_sub(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  FieldElement out(a.field_);
  const auto p = a.field_.characteristic().value();
  for (unsigned i = 0; i < a.field_.degree(); ++i) out.c_[i] = detail::sub_mod(a.c_[i], b.c_[i], p);
  return out;
}

FieldElement elem_neg(const FieldElement& a) {
  FieldElement out(a.field_);
  const auto p = a.field_.characteristic().value();
  for (unsigned i = 0; i < a.field_.degree(); ++i) out.c_[i] = detail::sub_mod(0, a.c_[i], p);
  return out;
}

FieldElement elem_mul(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const auto p = a.field_.characteristic().value();
  const unsigned r = a.field_.degree();
  const auto m = a.field_.modulus().coeffs();
  const auto& red = a.field_.reducer();

  // products are below 2^32 and at most 2r of them land in one slot, so the
  // 64-bit accumulators need a single reduction per coefficient
  std::array<std::uint64_t, 2 * kMaxExtensionDegree> t{};
  for (unsigned i = 0; i < r; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < r; ++j) t[i + j] += std::uint64_t{a.c_[i]} * b.c_[j];
  }
  // modulus is monic of degree r: z^r == -(m_0 + ... + m_{r-1} z^{r-1})
  for (unsigned k = 2 * r - 1; k-- > r;) {
    const std::uint64_t c = red.reduce(t[k]);
    if (c == 0) continue;
    for (unsigned j = 0; j < r; ++j) t[k - r + j] += c * (m[j] == 0 ? 0 : p - m[j]);
  }
  FieldElement out(a.field_);
  for (unsigned i = 0; i < r; ++i) out.c_[i] = red.reduce(t[i]);
  return out;
}

FieldElement elem_inv(const FieldElement& a) {
  if (a.is_zero()) throw DivisionByZero("0 has no inverse in GF(" + std::to_string(a.field().order()) + ")");
  const auto pm = a.field().characteristic();
  // Invariant: s_i * a == r_i (mod f)
  Polynomial r0 = a.field().modulus(), r1 = a.rep();
  Polynomial s0(pm), s1 = Polynomial::constant(pm, 1);
  while (!r1.is_zero()) {
    auto [quot, rem] = poly_divrem(r0, r1);
    Polynomial s2 = s0 - quot * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because the modulus is irreducible
  return FieldElement(a.field(), poly_scale(s0, residue_inv(r0.leading())));
}

FieldElement elem_pow(const FieldElement& a, std::uint64_t e) {
  FieldElement result = FieldElement::one(a.field());
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

FieldElement frobenius(const FieldElement& a) {
  return elem_pow(a, a.field().characteristic().value());
}

std::string format_element(const FieldElement& a) {
  return poly_format(a.rep(), a.field().variable());
}

std::vector<FieldElement> enumerate_elements(const FieldSpec& field) {
  std::vector<FieldElement> out;
  out.reserve(field.order());
  for (std::uint64_t i = 0; i < field.order(); ++i) out.push_back(FieldElement::from_index(field, i));
  return out;
}

OperationTables operation_tables(const FieldSpec& field) {
  if (field.order() > 256) {
    throw ScaleLimitExceeded("operation tables need q <= 256, got " + std::to_string(field.order()));
  }
  const auto elems = enumerate_elements(field);
  const std::size_t q = elems.size();
  OperationTables t;
  t.order = q;
  t.add.resize(q * q);
  t.mul.resize(q * q);
  for (const auto& e : elems) t.labels.push_back(format_element(e));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      t.add[i * q + j] = static_cast<std::uint32_t>((elems[i] + elems[j]).index());
      t.mul[i * q + j] = static_cast<std::uint32_t>((elems[i] * elems[j]).index());
    }
  }
  return t;
}

FieldPolynomial lift_polynomial(const Polynomial& f, const FieldSpec& field) {
  if (f.modulus() != field.characteristic()) throw ModulusMismatch("polynomial over a different Z_p");
  FieldPolynomial out;
  for (auto c : f.coeffs()) out.push_back(FieldElement::constant(field, c));
  return out;
}

FieldElement eval_in_field(const Polynomial& f, const FieldElement& a) {
  if (f.modulus() != a.field().characteristic()) throw ModulusMismatch("polynomial over a different Z_p");
  FieldElement acc = FieldElement::zero(a.field());
  const auto c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * a + FieldElement::constant(a.field(), *it);
  }
  return acc;
}

FieldPolynomial expand_linear_factors(const FieldSpec& field, std::span<const FieldElement> roots) {
  FieldPolynomial acc{FieldElement::one(field)};
  acc.reserve(roots.size() + 1);
  for (const auto& a : roots) {
    // acc *= (x - a), in place from the top coefficient down
    const FieldElement neg_a = -a;
    acc.push_back(acc.back());
    for (std::size_t i = acc.size() - 2; i > 0; --i) acc[i] = acc[i - 1] + acc[i] * neg_a;
    acc[0] = acc[0] * neg_a;
  }
  return acc;
}

}  // namespace ff
