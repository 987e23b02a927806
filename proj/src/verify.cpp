#include "ff/verify.hpp"

#include <random>
#include <sstream>

#include "ff/error.hpp"
#include "ff/factorization.hpp"
#include "ff/structure.hpp"

namespace ff {

namespace {

inline constexpr std::uint64_t kMaxVerifyOrder = 1u << 12;
inline constexpr std::size_t kAllPairsLimit = 8;

}  // namespace

AxiomReport check_field_axioms(const FieldSpec& field, std::uint64_t seed, std::uint64_t samples) {
  AxiomReport rep;
  const auto zero = FieldElement::zero(field), one = FieldElement::one(field);
  const auto fail = [&](const std::string& what, const FieldElement& a) {
    rep.passed = false;
    if (rep.failures.size() < 8) rep.failures.push_back(what + " fails at " + format_element(a));
  };
  const auto triple = [&](const FieldElement& a, const FieldElement& b, const FieldElement& c) {
    ++rep.cases;
    if (a + b != b + a) fail("additive commutativity", a);
    if (a * b != b * a) fail("multiplicative commutativity", a);
    if ((a + b) + c != a + (b + c)) fail("additive associativity", a);
    if ((a * b) * c != a * (b * c)) fail("multiplicative associativity", a);
    if (a * (b + c) != a * b + a * c) fail("distributivity", a);
  };
  const auto single = [&](const FieldElement& a) {
    if (a + zero != a) fail("additive identity", a);
    if (a * one != a) fail("multiplicative identity", a);
    if (a + (-a) != zero) fail("additive inverse", a);
    if (!a.is_zero() && a * elem_inv(a) != one) fail("multiplicative inverse", a);
  };

  const std::uint64_t q = field.order();
  if (q <= 64) {
    rep.exhaustive = true;
    const auto elems = enumerate_elements(field);
    for (const auto& a : elems) {
      single(a);
      for (const auto& b : elems) {
        for (const auto& c : elems) triple(a, b, c);
      }
    }
    return rep;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto a = FieldElement::from_index(field, pick(rng));
    const auto b = FieldElement::from_index(field, pick(rng));
    const auto c = FieldElement::from_index(field, pick(rng));
    single(a);
    triple(a, b, c);
  }
  return rep;
}

bool FtffReport::passed() const noexcept {
  for (const auto& c : clauses) {
    if (!c.passed) return false;
  }
  return !clauses.empty();
}

FtffReport verify_ftff(unsigned p_value, unsigned r, std::uint64_t seed) {
  const PrimeModulus p = check_prime(p_value);
  const auto q = checked_pow(p_value, r, kMaxVerifyOrder);
  if (r == 0) throw DegreeMismatch("exponent r must be at least 1");
  if (!q) throw ScaleLimitExceeded("verify-ftff needs p^r <= 4096");

  FtffReport rep{p_value, r, *q, {}};
  const FieldSpec field = construct_field(p, r);

  // (a): a field of order p^r exists and behaves as one
  ClauseResult a{"a", true, {}};
  a.details.push_back("constructed GF(" + std::to_string(*q) + ") = Z_" + std::to_string(p_value) +
                      "[z]/<" + poly_format(field.modulus(), 'z') + ">");
  const auto axioms = check_field_axioms(field, seed);
  a.passed &= axioms.passed;
  a.details.push_back(std::string("field axioms ") + (axioms.exhaustive ? "(exhaustive) " : "(sampled) ") +
                      std::to_string(axioms.cases) + " cases: " + (axioms.passed ? "ok" : "FAILED"));
  for (const auto& f : axioms.failures) a.details.push_back(f);

  const auto base = factor_xq_minus_x_base(p, r);
  const Polynomial xq = Polynomial::x_pow_minus_x(p, *q);
  const bool base_ok = base.product() == xq;
  a.passed &= base_ok;
  a.details.push_back("x^q-x over Z_p: " + std::to_string(base.factors.size()) +
                      " irreducible factors, re-multiplication " + (base_ok ? "ok" : "FAILED"));
  const auto ext = factor_xq_minus_x_extension(field);
  const bool ext_ok = ext.roots.size() == *q && ext.product() == lift_polynomial(xq, field);
  a.passed &= ext_ok;
  a.details.push_back("x^q-x over GF(q): " + std::to_string(ext.roots.size()) +
                      " distinct roots, re-multiplication " + (ext_ok ? "ok" : "FAILED"));
  rep.clauses.push_back(std::move(a));

  // (b): every degree-r representation is isomorphic to every other
  ClauseResult b{"b", true, {}};
  std::vector<FieldSpec> reps;
  for (auto& f : enumerate_irreducibles(p, r)) reps.push_back(construct_field(p, r, f.poly()));
  b.details.push_back(std::to_string(reps.size()) + " representation(s) of degree " + std::to_string(r));
  std::uint64_t built = 0;
  const auto check = [&](const FieldSpec& s, const FieldSpec& t) {
    const auto iso = build_isomorphism(s, t);
    const auto v = verify_isomorphism(iso, seed);
    ++built;
    if (!v.passed()) {
      b.passed = false;
      b.details.push_back("isomorphism " + poly_format(s.modulus(), 'z') + " -> " +
                          poly_format(t.modulus(), 'z') + " FAILED");
    }
  };
  if (reps.size() <= kAllPairsLimit) {
    for (const auto& s : reps) {
      for (const auto& t : reps) check(s, t);
    }
  } else {
    for (const auto& t : reps) check(reps.front(), t);
  }
  b.details.push_back(std::to_string(built) + " isomorphism(s) built and verified");
  rep.clauses.push_back(std::move(b));

  const auto structure = verify_ftff_c(field);
  ClauseResult ci{"c(i)", structure.additive_ok(), {}};
  ci.details.push_back(std::string("additive order p for all nonzero elements: ") +
                       (structure.additive_order_p ? "ok" : "FAILED"));
  ci.details.push_back(std::string("1, z, ..., z^(r-1) independent over Z_p: ") +
                       (structure.basis_independent ? "ok" : "FAILED"));
  rep.clauses.push_back(std::move(ci));

  ClauseResult cii{"c(ii)", structure.cyclic_ok(), {}};
  if (structure.generator) {
    cii.details.push_back("generator " + format_element(*structure.generator) + ", powers " +
                          (structure.powers_exhaust ? "exhaust" : "DO NOT exhaust") +
                          " the nonzero elements");
  }
  for (const auto& f : structure.failures) cii.details.push_back(f);
  rep.clauses.push_back(std::move(cii));
  return rep;
}

nlohmann::json ftff_report_to_json(const FtffReport& rep) {
  nlohmann::json clauses = nlohmann::json::array();
  for (const auto& c : rep.clauses) {
    clauses.push_back({{"clause", c.clause}, {"passed", c.passed}, {"details", c.details}});
  }
  return {{"p", rep.p}, {"r", rep.r}, {"q", rep.q}, {"passed", rep.passed()}, {"clauses", clauses}};
}

std::string ftff_report_to_text(const FtffReport& rep) {
  std::ostringstream os;
  os << "GF(" << rep.q << ") with p = " << rep.p << ", r = " << rep.r << '\n';
  for (const auto& c : rep.clauses) {
    os << "  clause " << c.clause << ": " << (c.passed ? "PASS" : "FAIL") << '\n';
    for (const auto& d : c.details) os << "      " << d << '\n';
  }
  os << (rep.passed() ? "all clauses pass" : "some clauses FAILED") << '\n';
  return os.str();
}

}  // namespace ff
