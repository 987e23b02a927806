#include "ff/structure.hpp"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "ff/error.hpp"
#include "oracles.hpp"

namespace ff {
namespace {

FieldSpec gf(unsigned p, unsigned r) { return construct_field(check_prime(p), r); }

FieldElement E(const FieldSpec& f, const char* text) {
  return FieldElement(f, poly_parse(text, f.characteristic()));
}

TEST(Order, SmallExamples) {
  const auto f8 = gf(2, 3);
  EXPECT_EQ(multiplicative_order(FieldElement::one(f8)), 1u);
  EXPECT_EQ(multiplicative_order(E(f8, "z+1")), 7u);
  const auto f7 = gf(7, 1);
  EXPECT_EQ(multiplicative_order(FieldElement::constant(f7, 3)), 6u);
  EXPECT_THROW(multiplicative_order(FieldElement::zero(f7)), DivisionByZero);
}

TEST(Order, MatchesRepeatedMultiplicationInPrimeFields) {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 31u, 97u}) {
    const auto f = gf(p, 1);
    for (unsigned a = 1; a < p; ++a) {
      EXPECT_EQ(multiplicative_order(FieldElement::constant(f, a)),
                static_cast<std::uint64_t>(oracle::order_mod(static_cast<int>(a), static_cast<int>(p))));
    }
  }
}

TEST(Generator, FirstInEnumerationOrder) {
  EXPECT_TRUE(find_generator(gf(2, 1)).is_one());
  EXPECT_EQ(format_element(find_generator(gf(2, 3))), "z");
  ASSERT_EQ(oracle::order_mod(2, 7), 3);  // 2 is not a generator, 3 is next
  EXPECT_EQ(format_element(find_generator(gf(7, 1))), "3");
}

TEST(Generator, Counts) {
  std::vector<int> gens;
  for (int a = 1; a < 7; ++a) {
    if (oracle::order_mod(a, 7) == 6) gens.push_back(a);
  }
  ASSERT_EQ(gens, (std::vector<int>{3, 5}));
  EXPECT_EQ(count_generators(gf(7, 1)), 2u);
  EXPECT_EQ(count_generators(gf(2, 3)), 6u);
  EXPECT_EQ(count_generators(gf(2, 2)), 2u);
  EXPECT_THROW(count_generators(gf(2, 13)), ScaleLimitExceeded);
}

TEST(Generator, PhiRoutinesAgree) {
  for (std::uint64_t n = 1; n < 3000; ++n) EXPECT_EQ(euler_phi(n), oracle::phi_by_gcd(n)) << n;
}

TEST(Divisors, Sorted) {
  EXPECT_EQ(sorted_divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(sorted_divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(sorted_divisors(1048575).size(), 48u);  // 3*5^2*11*31*41
}

TEST(VerifyC, Examples) {
  const auto f4 = gf(2, 2);
  const auto r4 = verify_ftff_c(f4);
  EXPECT_TRUE(r4.passed());
  EXPECT_EQ(format_element(*r4.generator), "z");
  EXPECT_EQ(elem_pow(*r4.generator, 2), E(f4, "z+1"));
  EXPECT_TRUE(elem_pow(*r4.generator, 3).is_one());
  EXPECT_TRUE(verify_ftff_c(gf(3, 2)).passed());
  const auto f8 = gf(2, 3);
  EXPECT_TRUE(verify_ftff_c(f8).passed());
  std::set<std::uint64_t> seen;
  for (std::uint64_t n = 1; n <= 7; ++n) seen.insert(elem_pow(E(f8, "z+1"), n).index());
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_EQ(seen.count(0), 0u);
}

TEST(StructureProperty, LagrangeAndOrderDistribution) {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (unsigned r = 1; checked_pow(p, r, 1u << 10); ++r) {
      const auto f = gf(p, r);
      const std::uint64_t n = f.order() - 1;
      const auto rep = generator_report(f);
      std::uint64_t max_order = 0, total = 0;
      for (std::uint64_t i = 1; i < f.order(); ++i) {
        const auto a = FieldElement::from_index(f, i);
        ASSERT_TRUE(elem_pow(a, n).is_one());
        ASSERT_EQ(n % rep.order_table[i], 0u);
        max_order = std::max(max_order, rep.order_table[i]);
      }
      for (auto d : sorted_divisors(n)) {
        total += static_cast<std::uint64_t>(std::count(rep.order_table.begin() + 1, rep.order_table.end(), d));
      }
      EXPECT_EQ(total, n);
      EXPECT_EQ(max_order, n);
      EXPECT_EQ(rep.generator_count, oracle::phi_by_gcd(n));
      EXPECT_EQ(rep.generator, find_generator(f));

      std::set<std::uint64_t> powers;
      FieldElement acc = rep.generator;
      for (std::uint64_t k = 0; k < n; ++k, acc = acc * rep.generator) powers.insert(acc.index());
      EXPECT_EQ(powers.size(), n);
      EXPECT_EQ(powers.count(0), 0u);
    }
  }
}

}  // namespace
}  // namespace ff
