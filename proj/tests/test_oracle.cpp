#include <gtest/gtest.h>

#include "schurlab/oracle.hpp"

using namespace schurlab;

TEST(Oracle, KostkaNumbers) {
  EXPECT_EQ(oracle::kostka(Partition({2, 1}), std::vector<int>{1, 1, 1}), 2u);
  EXPECT_EQ(oracle::kostka(Partition({3, 2}), std::vector<int>{2, 2, 1}), 2u);
  EXPECT_EQ(oracle::kostka(Partition({2, 2}), std::vector<int>{1, 1, 1, 1}), 2u);
  EXPECT_EQ(oracle::kostka(Partition({3, 2, 1}), std::vector<int>{1, 1, 1, 1, 1, 1}), 16u);
  EXPECT_EQ(oracle::kostka(Partition({2}), std::vector<int>{0, 2}), 1u);
  EXPECT_EQ(oracle::kostka(Partition({1, 1}), std::vector<int>{2}), 0u);
}

TEST(Oracle, SchurMonomialsAreSymmetric) {
  const auto poly = oracle::schur_monomials(Partition({2, 1}), 3);
  EXPECT_EQ(poly.at({2, 1, 0}), 1);
  EXPECT_EQ(poly.at({0, 1, 2}), 1);
  EXPECT_EQ(poly.at({1, 1, 1}), 2);
  EXPECT_EQ(poly.size(), 7u);
  EXPECT_TRUE(oracle::schur_monomials(Partition({1, 1, 1}), 2).empty());
}

TEST(Oracle, SmallCoefficients) {
  EXPECT_EQ(oracle::lr_coefficient(Partition({2, 1}), Partition({1}), Partition({1, 1})), 1u);
  EXPECT_EQ(oracle::lr_coefficient(Partition({2}), Partition({1}), Partition({1})), 1u);
  EXPECT_EQ(oracle::lr_coefficient(Partition({1, 1, 1, 1}), Partition({1, 1}), Partition({1, 1})), 1u);
  EXPECT_EQ(oracle::lr_coefficient(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})), 2u);
}

TEST(Oracle, SubstitutionExamples) {
  EXPECT_EQ(oracle::derived(Partition({1}), 1, 3), SchurVector::unit(Partition(), 3, Mode::Truncated) + SchurVector::unit(Partition(), 3, Mode::Truncated) + SchurVector::unit(Partition(), 3, Mode::Truncated));
  EXPECT_EQ(oracle::derived(Partition({1, 1, 1}), 1, 3), SchurVector::unit(Partition({1, 1}), 3, Mode::Truncated));
  EXPECT_EQ(oracle::derived(Partition({2}), 1, 2).coefficient(Partition({1})), 3);
  EXPECT_EQ(oracle::derived(Partition({2, 1}), 3, 3).coefficient(Partition()), 8);
  EXPECT_EQ(oracle::derived(Partition({1, 1}), 2, 2).coefficient(Partition()), 1);
}

TEST(Oracle, EvaluationAtPoints) {
  const std::vector<Integer> ones{1, 1, 1};
  EXPECT_EQ(oracle::evaluate_schur(Partition({2, 1}), ones), 8);
  EXPECT_EQ(oracle::evaluate_schur(Partition({1, 1, 1, 1}), ones), 0);
  const std::vector<Integer> pt{2, 3};
  // s_(2,1)(x,y) = x^2 y + x y^2
  EXPECT_EQ(oracle::evaluate_schur(Partition({2, 1}), pt), 30);
  EXPECT_EQ(oracle::evaluate_schur(Partition(), pt), 1);
  for (int d = 0; d <= 5; ++d)
    for (const auto& l : enumerate_partitions(d)) {
      Integer direct = 0;
      const std::vector<Integer> x{2, 5, 7};
      for (const auto& [e, c] : oracle::schur_monomials(l, 3)) {
        Integer m = c;
        for (std::size_t i = 0; i < 3; ++i) {
          Integer p;
          mpz_pow_ui(p.get_mpz_t(), x[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
          m *= p;
        }
        direct += m;
      }
      EXPECT_EQ(oracle::evaluate_schur(l, x), direct) << l.to_string();
    }
}
