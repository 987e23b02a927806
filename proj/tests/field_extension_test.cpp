#include "ff/field_extension.hpp"

#include <random>

#include <gtest/gtest.h>

#include "ff/error.hpp"
#include "oracles.hpp"

namespace ff {
namespace {

FieldSpec field(unsigned p, unsigned r, const char* modulus = nullptr) {
  const auto pm = check_prime(p);
  if (!modulus) return construct_field(pm, r);
  const char var = modulus[0] == 'w' ? 'w' : 'z';
  return construct_field(pm, r, poly_parse(modulus, pm), var);
}

FieldElement E(const FieldSpec& f, const char* text) {
  return FieldElement(f, poly_parse(text, f.characteristic()));
}

TEST(ConstructField, ExplicitModulus) {
  const auto f4 = field(2, 2, "z^2+z+1");
  EXPECT_EQ(f4.order(), 4u);
  EXPECT_EQ(f4.degree(), 2u);
  EXPECT_EQ(poly_format(f4.modulus(), 'z'), "z^2+z+1");
}

TEST(ConstructField, ReducibleModulusCarriesWitness) {
  try {
    field(2, 2, "z^2+1");
    ADD_FAILURE();
  } catch (const ReduciblePolynomial& e) {
    EXPECT_EQ(e.witness(), "z+1");
  }
  EXPECT_THROW(field(2, 4, "z^4+z^2+1"), ReduciblePolynomial);
}

TEST(ConstructField, DefaultModulusIsSmallestIrreducible) {
  // candidates in index order: the first irreducible cubic over Z_2
  const auto all = enumerate_irreducibles(check_prime(2), 3);
  ASSERT_EQ(poly_format(all.front().poly(), 'z'), "z^3+z+1");
  EXPECT_EQ(poly_format(field(2, 3).modulus(), 'z'), "z^3+z+1");
  EXPECT_EQ(poly_format(field(3, 2).modulus(), 'z'), "z^2+1");
  EXPECT_EQ(poly_format(field(7, 1).modulus(), 'z'), "z");
}

TEST(ConstructField, Errors) {
  const auto p2 = check_prime(2);
  EXPECT_THROW(construct_field(p2, 3, poly_parse("z^2+z+1", p2)), DegreeMismatch);
  EXPECT_THROW(construct_field(check_prime(3), 2, poly_parse("2z^2+1", check_prime(3))), NotMonic);
  EXPECT_THROW(construct_field(p2, 21), ScaleLimitExceeded);
  EXPECT_THROW(construct_field(p2, 0), DegreeMismatch);
  EXPECT_THROW(construct_field(p2, 2, poly_parse("z^2+z+1", check_prime(3))), ModulusMismatch);
}

TEST(ConstructField, IdentityIsTheModulus) {
  EXPECT_FALSE(field(2, 3, "z^3+z+1") == field(2, 3, "w^3+w^2+1"));
  EXPECT_TRUE(field(2, 3, "z^3+z+1") == field(2, 3, "w^3+w+1"));
}

TEST(ElementArithmetic, KnownProducts) {
  const auto f4 = field(2, 2, "z^2+z+1");
  EXPECT_EQ(E(f4, "z+1") * E(f4, "z+1"), E(f4, "z"));
  const auto f8 = field(2, 3, "z^3+z+1");
  EXPECT_EQ(E(f8, "z^2+1") * E(f8, "z+1"), E(f8, "z^2"));
  const auto f8w = field(2, 3, "w^3+w^2+1");
  EXPECT_EQ(E(f8w, "w^2+1") * E(f8w, "w+1"), E(f8w, "w"));
}

TEST(ElementArithmetic, FieldMismatch) {
  const auto f8 = field(2, 3, "z^3+z+1");
  const auto f8w = field(2, 3, "w^3+w^2+1");
  EXPECT_THROW(E(f8, "z") + E(f8w, "w"), FieldMismatch);
  EXPECT_THROW(E(f8, "z") * E(f8w, "w"), FieldMismatch);
}

TEST(ElementArithmetic, Inverse) {
  const auto f4 = field(2, 2, "z^2+z+1");
  EXPECT_EQ(elem_inv(E(f4, "z")), E(f4, "z+1"));
  EXPECT_EQ(elem_inv(FieldElement::one(f4)), FieldElement::one(f4));
  EXPECT_THROW(elem_inv(FieldElement::zero(f4)), DivisionByZero);

  // brute-force scan of F_8 with oracle arithmetic
  const oracle::Poly m{1, 1, 0, 1}, z{0, 1};
  oracle::Poly found;
  for (std::uint64_t i = 1; i < 8; ++i) {
    const auto cand = oracle::from_index(i, 2, 3);
    if (oracle::field_mul(z, cand, m, 2) == oracle::Poly{1}) found = cand;
  }
  ASSERT_EQ(found, (oracle::Poly{1, 0, 1}));  // z^2+1
  const auto f8 = field(2, 3, "z^3+z+1");
  EXPECT_EQ(elem_inv(E(f8, "z")), E(f8, "z^2+1"));
}

TEST(ElementArithmetic, Pow) {
  const auto f8 = field(2, 3, "z^3+z+1");
  EXPECT_TRUE(elem_pow(E(f8, "z+1"), 7).is_one());
  EXPECT_EQ(elem_pow(E(f8, "z^2+z"), 1), E(f8, "z^2+z"));
  EXPECT_TRUE(elem_pow(E(f8, "z^2+z"), 0).is_one());
  const auto f4 = field(2, 2, "z^2+z+1");
  EXPECT_EQ(elem_pow(E(f4, "z"), 2), E(f4, "z+1"));
}

TEST(ElementArithmetic, Frobenius) {
  const auto f4 = field(2, 2, "z^2+z+1");
  EXPECT_EQ(frobenius(E(f4, "z")), E(f4, "z+1"));
  EXPECT_TRUE(frobenius(FieldElement::zero(f4)).is_zero());
  EXPECT_TRUE(frobenius(FieldElement::one(f4)).is_one());
  const auto f8 = field(2, 3, "z^3+z+1");
  EXPECT_EQ(frobenius(E(f8, "z+1")), E(f8, "z^2+1"));
}

TEST(ElementArithmetic, MatchesOracleMultiplication) {
  for (const char* m : {"z^3+z+1", "z^3+z^2+1"}) {
    const auto f = field(2, 3, m);
    const auto mp = oracle::Poly(f.modulus().coeffs().begin(), f.modulus().coeffs().end());
    for (std::uint64_t i = 0; i < 8; ++i) {
      for (std::uint64_t j = 0; j < 8; ++j) {
        const auto prod = FieldElement::from_index(f, i) * FieldElement::from_index(f, j);
        const auto want = oracle::field_mul(oracle::from_index(i, 2, 3), oracle::from_index(j, 2, 3), mp, 2);
        const auto rep = prod.rep();
        EXPECT_EQ(oracle::Poly(rep.coeffs().begin(), rep.coeffs().end()), want);
      }
    }
  }
  // large p exercises the 64-bit accumulation path
  const auto f = field(65521, 1);
  EXPECT_TRUE((FieldElement::constant(f, 65520) * FieldElement::constant(f, 65520)).is_one());
  const auto g = field(251, 2);
  std::mt19937_64 rng(4);
  const auto gm = oracle::Poly(g.modulus().coeffs().begin(), g.modulus().coeffs().end());
  for (int t = 0; t < 200; ++t) {
    const auto i = rng() % g.order(), j = rng() % g.order();
    const auto rep = (FieldElement::from_index(g, i) * FieldElement::from_index(g, j)).rep();
    EXPECT_EQ(oracle::Poly(rep.coeffs().begin(), rep.coeffs().end()),
              oracle::field_mul(oracle::from_index(i, 251, 2), oracle::from_index(j, 251, 2), gm, 251));
  }
}

TEST(Enumerate, Order) {
  const auto f4 = field(2, 2, "z^2+z+1");
  std::vector<std::string> names;
  for (const auto& e : enumerate_elements(f4)) names.push_back(format_element(e));
  EXPECT_EQ(names, (std::vector<std::string>{"0", "1", "z", "z+1"}));
  EXPECT_EQ(enumerate_elements(field(2, 3)).size(), 8u);
  const auto f9 = enumerate_elements(field(3, 2, "z^2+1"));
  EXPECT_EQ(f9.size(), 9u);
  for (const auto& e : f9) EXPECT_LT(e.rep().degree(), 2);
  for (std::uint64_t i = 0; i < f9.size(); ++i) EXPECT_EQ(f9[i].index(), i);
}

TEST(OperationTables, QuotientF4) {
  const auto t = operation_tables(field(2, 2, "z^2+z+1"));
  EXPECT_EQ(t.labels, (std::vector<std::string>{"0", "1", "z", "z+1"}));
  // indices 0, 1, z = 2, z+1 = 3
  const std::vector<std::uint32_t> add{0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  const std::vector<std::uint32_t> mul{0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 3, 1, 0, 3, 1, 2};
  EXPECT_EQ(t.add, add);
  EXPECT_EQ(t.mul, mul);
}

TEST(OperationTables, PrimeF3) {
  const auto t = operation_tables(field(3, 1));
  // a -> 2
  EXPECT_EQ(t.add, (std::vector<std::uint32_t>{0, 1, 2, 1, 2, 0, 2, 0, 1}));
  EXPECT_EQ(t.mul, (std::vector<std::uint32_t>{0, 0, 0, 0, 1, 2, 0, 2, 1}));
}

TEST(OperationTables, ZeroRowAndScaleGuard) {
  const auto t = operation_tables(field(5, 2));
  for (std::size_t j = 0; j < t.order; ++j) EXPECT_EQ(t.product(0, j), 0u);
  EXPECT_THROW(operation_tables(field(2, 9)), ScaleLimitExceeded);
  EXPECT_NO_THROW(operation_tables(field(2, 8)));
}

TEST(OperationTables, JsonShape) {
  const auto j = table_to_json(operation_tables(field(2, 2)), '+');
  EXPECT_EQ(j["op"], "+");
  EXPECT_EQ(j["order"], 4);
  EXPECT_EQ(j["elements"][3], "z+1");
  EXPECT_EQ(j["table"][1][2], "z+1");
}

// --- properties over every field in a small range ----------------------------

std::vector<FieldSpec> all_small_fields(std::uint64_t max_q) {
  std::vector<FieldSpec> out;
  for (unsigned p = 2; p <= max_q; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned r = 1; checked_pow(p, r, max_q); ++r) {
      for (const auto& f : enumerate_irreducibles(check_prime(p), r)) {
        out.push_back(construct_field(check_prime(p), r, f.poly()));
      }
    }
  }
  return out;
}

TEST(FieldProperty, AxiomsExhaustiveUpTo32) {
  for (const auto& f : all_small_fields(32)) {
    const auto elems = enumerate_elements(f);
    const auto zero = FieldElement::zero(f), one = FieldElement::one(f);
    for (const auto& a : elems) {
      ASSERT_EQ(a + zero, a);
      ASSERT_EQ(a * one, a);
      ASSERT_TRUE((a + (-a)).is_zero());
      if (!a.is_zero()) ASSERT_TRUE((a * elem_inv(a)).is_one());
      for (const auto& b : elems) {
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        for (const auto& c : elems) {
          ASSERT_EQ((a + b) + c, a + (b + c));
          ASSERT_EQ((a * b) * c, a * (b * c));
          ASSERT_EQ(a * (b + c), a * b + a * c);
        }
      }
    }
  }
}

TEST(FieldProperty, CharacteristicAndFermat) {
  for (const auto& f : all_small_fields(256)) {
    const unsigned p = f.characteristic().value();
    for (const auto& a : enumerate_elements(f)) {
      FieldElement acc = FieldElement::zero(f);
      for (unsigned k = 1; k <= p; ++k) {
        acc = acc + a;
        if (!a.is_zero() && k < p) ASSERT_FALSE(acc.is_zero());
      }
      ASSERT_TRUE(acc.is_zero());
      ASSERT_EQ(elem_pow(a, f.order()), a);
    }
  }
}

TEST(FieldProperty, FrobeniusIsHomomorphismFixingPrimeField) {
  for (const auto& f : all_small_fields(64)) {
    const auto elems = enumerate_elements(f);
    std::size_t fixed = 0;
    for (const auto& a : elems) {
      if (frobenius(a) == a) {
        ++fixed;
        EXPECT_LT(a.rep().degree(), 1);
      }
      for (const auto& b : elems) {
        ASSERT_EQ(frobenius(a + b), frobenius(a) + frobenius(b));
        ASSERT_EQ(frobenius(a * b), frobenius(a) * frobenius(b));
      }
    }
    EXPECT_EQ(fixed, f.characteristic().value());
  }
}

TEST(FieldProperty, F4IsNotZ4) {
  const auto f4 = field(2, 2);
  EXPECT_TRUE((FieldElement::one(f4) + FieldElement::one(f4)).is_zero());
}

TEST(FieldPolynomials, ExpandLinearFactors) {
  const auto f4 = field(2, 2, "z^2+z+1");
  const std::vector<FieldElement> roots{E(f4, "z"), E(f4, "z+1")};
  EXPECT_EQ(expand_linear_factors(f4, roots), lift_polynomial(poly_parse("x^2+x+1", check_prime(2)), f4));
  EXPECT_EQ(eval_in_field(poly_parse("x^2+x+1", check_prime(2)), E(f4, "z")), FieldElement::zero(f4));
}

}  // namespace
}  // namespace ff
