#include "ff/factorization.hpp"

#include <set>

#include <gtest/gtest.h>

#include "ff/error.hpp"
#include "oracles.hpp"

namespace ff {
namespace {

std::vector<std::string> factor_names(const BaseFactorization& fac) {
  std::vector<std::string> out;
  for (const auto& f : fac.factors) out.push_back(poly_format(f.poly()));
  return out;
}

std::vector<std::string> root_names(const std::vector<FieldElement>& roots) {
  std::vector<std::string> out;
  for (const auto& a : roots) out.push_back(format_element(a));
  return out;
}

FieldSpec field(unsigned p, unsigned r, const char* modulus) {
  const auto pm = check_prime(p);
  return construct_field(pm, r, poly_parse(modulus, pm), modulus[0]);
}

TEST(FactorBase, KnownFactorizations) {
  EXPECT_EQ(factor_names(factor_xq_minus_x_base(check_prime(2), 2)),
            (std::vector<std::string>{"x", "x+1", "x^2+x+1"}));
  EXPECT_EQ(factor_names(factor_xq_minus_x_base(check_prime(2), 3)),
            (std::vector<std::string>{"x", "x+1", "x^3+x+1", "x^3+x^2+1"}));
  EXPECT_EQ(factor_names(factor_xq_minus_x_base(check_prime(3), 2)),
            (std::vector<std::string>{"x", "x+1", "x+2", "x^2+1", "x^2+x+2", "x^2+2x+2"}));
}

TEST(FactorBase, Text) {
  EXPECT_EQ(format_factorization(factor_xq_minus_x_base(check_prime(2), 3)),
            "x^8+x = x * (x+1) * (x^3+x+1) * (x^3+x^2+1)");
  EXPECT_EQ(format_factorization(factor_xq_minus_x_base(check_prime(3), 2)),
            "x^9+2x = x * (x+1) * (x+2) * (x^2+1) * (x^2+x+2) * (x^2+2x+2)");
}

TEST(FactorBase, ScaleGuard) {
  EXPECT_THROW(factor_xq_minus_x_base(check_prime(2), 21), ScaleLimitExceeded);
}

TEST(FactorBase, RemultiplicationAndDegreeBookkeeping) {
  for (unsigned p = 2; p < 64; ++p) {
    if (!is_prime(p)) continue;
    const auto pm = check_prime(p);
    for (unsigned r = 1; checked_pow(p, r, 1u << 12); ++r) {
      const auto fac = factor_xq_minus_x_base(pm, r);
      EXPECT_EQ(fac.product(), Polynomial::x_pow_minus_x(pm, fac.q)) << p << "^" << r;
      std::uint64_t total = 0;
      std::set<std::vector<std::uint32_t>> distinct;
      for (const auto& f : fac.factors) {
        total += static_cast<std::uint64_t>(f.degree());
        EXPECT_EQ(r % static_cast<unsigned>(f.degree()), 0u);
        distinct.emplace(f.poly().coeffs().begin(), f.poly().coeffs().end());
      }
      EXPECT_EQ(total, fac.q);
      EXPECT_EQ(distinct.size(), fac.factors.size());
      for (const auto& [deg, n] : fac.degree_histogram()) EXPECT_EQ(n, count_irreducibles(pm, deg));
    }
  }
}

TEST(FactorBase, MatchesNaiveTrialDivision) {
  for (auto [p, r] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}}) {
    const auto fac = factor_xq_minus_x_base(check_prime(p), r);
    std::multiset<oracle::Poly> got;
    for (const auto& f : fac.factors) got.emplace(f.poly().coeffs().begin(), f.poly().coeffs().end());
    EXPECT_EQ(got, oracle::naive_factor_xq_minus_x(p, static_cast<int>(fac.q))) << p << "^" << r;
  }
}

TEST(FactorExtension, AllElementsAreRoots) {
  const auto f4 = field(2, 2, "z^2+z+1");
  EXPECT_EQ(root_names(factor_xq_minus_x_extension(f4).roots),
            (std::vector<std::string>{"0", "1", "z", "z+1"}));
  const auto f8 = factor_xq_minus_x_extension(construct_field(check_prime(2), 3));
  EXPECT_EQ(f8.roots.size(), 8u);
  EXPECT_EQ(f8.product(), lift_polynomial(f8.source, f8.field));
  EXPECT_EQ(root_names(factor_xq_minus_x_extension(construct_field(check_prime(2), 1)).roots),
            (std::vector<std::string>{"0", "1"}));
}

TEST(RootsInField, KnownRootLists) {
  const auto p2 = check_prime(2);
  EXPECT_EQ(root_names(roots_in_field(poly_parse("x^2+x+1", p2), field(2, 2, "z^2+z+1"))),
            (std::vector<std::string>{"z", "z+1"}));
  EXPECT_EQ(root_names(roots_in_field(poly_parse("x^3+x+1", p2), field(2, 3, "z^3+z+1"))),
            (std::vector<std::string>{"z", "z^2", "z^2+z"}));
  EXPECT_EQ(root_names(roots_in_field(poly_parse("x^3+x+1", p2), field(2, 3, "w^3+w^2+1"))),
            (std::vector<std::string>{"w+1", "w^2+1", "w^2+w"}));
  EXPECT_THROW(roots_in_field(Polynomial(p2), field(2, 2, "z^2+z+1")), DivisionByZero);
  EXPECT_THROW(roots_in_field(poly_parse("x", p2), construct_field(p2, 13)), ScaleLimitExceeded);
}

TEST(LiftLinearSplit, KnownSplits) {
  const auto p2 = check_prime(2), p3 = check_prime(3);
  const auto f9 = field(3, 2, "z^2+1");
  EXPECT_EQ(root_names(lift_linear_split(IrreduciblePolynomial(poly_parse("x^3+x^2+1", p2)), field(2, 3, "z^3+z+1"))),
            (std::vector<std::string>{"z+1", "z^2+1", "z^2+z+1"}));
  EXPECT_EQ(root_names(lift_linear_split(IrreduciblePolynomial(poly_parse("x^2+x+2", p3)), f9)),
            (std::vector<std::string>{"z+1", "2z+1"}));
  EXPECT_EQ(root_names(lift_linear_split(IrreduciblePolynomial(poly_parse("x^2+2x+2", p3)), f9)),
            (std::vector<std::string>{"z+2", "2z+2"}));
  EXPECT_EQ(root_names(lift_linear_split(IrreduciblePolynomial(poly_parse("x^2+1", p3)), f9)),
            (std::vector<std::string>{"z", "2z"}));
  EXPECT_THROW(lift_linear_split(IrreduciblePolynomial(poly_parse("x^2+x+1", p2)), field(2, 3, "z^3+z+1")),
               DegreeNotDividing);
}

// a degree-d factor has d roots in GF(p^s) when d | s and none otherwise
TEST(Splitting, RootCountsAcrossExtensions) {
  for (unsigned p : {2u, 3u}) {
    const auto pm = check_prime(p);
    for (unsigned r = 1; r <= 4; ++r) {
      for (const auto& f : factor_xq_minus_x_base(pm, r).factors) {
        const auto d = static_cast<unsigned>(f.degree());
        for (unsigned s = 1; s <= 4 && checked_pow(p, s, 1u << 12); ++s) {
          const auto roots = roots_in_field(f.poly(), construct_field(pm, s));
          EXPECT_EQ(roots.size(), s % d == 0 ? d : 0u) << poly_format(f.poly()) << " in GF(" << p << "^" << s << ")";
        }
      }
    }
  }
}

TEST(Divisors, Small) {
  EXPECT_EQ(divisors(12), (std::vector<unsigned>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(1), (std::vector<unsigned>{1}));
}

}  // namespace
}  // namespace ff
