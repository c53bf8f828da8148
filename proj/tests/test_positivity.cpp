#include <gtest/gtest.h>

#include "schurlab/derived.hpp"
#include "schurlab/error.hpp"
#include "schurlab/oracle.hpp"
#include "schurlab/positivity.hpp"

using namespace schurlab;

namespace {

SchurVector s(const Partition& p, int n, Mode mode = Mode::Truncated) { return SchurVector::unit(p, n, mode); }

std::vector<Partition> all_up_to(int max_size) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_size; ++d)
    for (auto& p : enumerate_partitions(d)) out.push_back(p);
  return out;
}

// Difference built only from the substitution and monomial-product oracles.
SchurVector oracle_difference(const Partition& l, int i, int n) {
  auto order = [&](int j) {
    return j < 0 || j > l.size() ? SchurVector(n, Mode::Truncated) : oracle::derived(l, j, n);
  };
  auto product = [&](const SchurVector& a, const SchurVector& b) {
    SchurVector out(n, Mode::Truncated);
    for (const auto& [p, x] : a.terms())
      for (const auto& [q, y] : b.terms()) out += scale(oracle::product(p, q, n), x * y);
    return out;
  };
  return product(order(i), order(i)) - product(order(i - 1), order(i + 1));
}

}  // namespace

TEST(Positivity, ElementaryClosedForm) {
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) {
      const auto r = conjecture1_expr(rectangle(1, n), i, n, Mode::Truncated);
      EXPECT_EQ(r.vector, s(rectangle(2, n - i), n)) << "n=" << n << " i=" << i;
      EXPECT_TRUE(r.positive);
    }
}

TEST(Positivity, KnownCoefficients) {
  EXPECT_EQ(conjecture1_expr(Partition({3, 1, 1}), 1, 3, Mode::Truncated).vector.coefficient(Partition({3, 3, 2})), 21);
  const auto r = conjecture1_expr(Partition({2, 1}), 2, 3, Mode::Truncated);
  EXPECT_TRUE(r.positive);
  EXPECT_EQ(r.vector.degree(), 2);
  EXPECT_THROW(conjecture1_expr(Partition({2, 1}), -1, 3, Mode::Truncated), SchurError);
}

TEST(Positivity, SumOfSchurPolynomialsIsNotPositiveFormally) {
  const SchurVector p = s({3}, 3, Mode::Formal) + s({1, 1, 1}, 3, Mode::Formal);
  const auto r = polynomial_expr(p, 1);
  SchurVector expected(3, Mode::Formal);
  expected.add_term(Partition({4}), 14);
  expected.add_term(Partition({3, 1}), 24);
  expected.add_term(Partition({2, 2}), 26);
  expected.add_term(Partition({1, 1, 1, 1}), -10);
  EXPECT_EQ(r.vector, expected);
  EXPECT_FALSE(r.positive);
  EXPECT_EQ(r.witness->first, Partition({1, 1, 1, 1}));
  EXPECT_EQ(r.witness->second, -10);
  EXPECT_TRUE(polynomial_expr(truncate(p), 1).positive);
}

TEST(Positivity, ProductWithEmptyFactorMatchesSingle) {
  for (const auto& l : all_up_to(6))
    for (int i = 1; i < l.size(); ++i) {
      const int n = std::max(1, l.length());
      EXPECT_EQ(conjecture2_expr(l, Partition(), i, n, Mode::Truncated).vector,
                conjecture1_expr(l, i, n, Mode::Truncated).vector);
    }
  EXPECT_TRUE(conjecture2_expr(Partition({1}), Partition({1}), 1, 2, Mode::Truncated).positive);
}

TEST(Positivity, StarDecompositionShapes) {
  EXPECT_TRUE(decompose_star(rectangle(4, 2), 2, Mode::Truncated).type1.empty());
  const auto d = decompose_star(Partition({3, 3, 2}), 4, Mode::Truncated);
  ASSERT_EQ(d.type1.size(), 1u);
  EXPECT_EQ(d.type1[0].j, 2);
  EXPECT_EQ(d.type1[0].k, 3);
  for (int k = 2; k <= 5; ++k)
    for (int l = 2; l <= 5; ++l) {
      const auto h = decompose_star(hook(k, l), l, Mode::Truncated);
      EXPECT_EQ(h.type1.size(), 1u);
      std::vector<int> up, left;
      for (const auto& t : h.type2)
        if (t.removal) up.push_back(t.j);
      for (const auto& t : h.type3)
        if (t.removal) left.push_back(t.j);
      EXPECT_EQ(up, l > 2 ? std::vector<int>{l} : std::vector<int>{});
      EXPECT_EQ(left, k > 2 ? std::vector<int>{1} : std::vector<int>{});
    }
}

TEST(Positivity, StarIdentityExamples) {
  EXPECT_TRUE(verify_star_identity(Partition({3, 3, 2}), 4, Mode::Truncated));
  EXPECT_TRUE(verify_star_identity(Partition({2, 1}), 3, Mode::Truncated));
  for (int k = 1; k <= 6; ++k) EXPECT_TRUE(verify_star_identity(Partition({k}), 2, Mode::Truncated));
}

TEST(Positivity, TypeTwoThreeExamples) {
  EXPECT_TRUE(type23_check(Partition({3, 3, 2}), 2, 4));
  EXPECT_TRUE(type23_check(Partition({3, 3, 2}), 3, 4));
  EXPECT_TRUE(type23_check(Partition({4}), 1, 1));
  try {
    type23_check(Partition({3, 3, 2}), 1, 4);
    FAIL();
  } catch (const SchurError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACorner);
  }
}

TEST(Positivity, SpecialCoefficientFormulas) {
  EXPECT_EQ(special_coefficient(Family::Hook, 3, 3, 3), 21);
  EXPECT_EQ(special_coefficient(Family::Kk1, 3, 0, 3), 13);
  EXPECT_EQ(special_coefficient(Family::Conj, 3, 0, 3), 19);
  EXPECT_THROW(special_coefficient(Family::Hook, 2, 3, 3), SchurError);
  EXPECT_THROW(special_coefficient(Family::Kk1, 2, 0, 3), SchurError);
}

TEST(Positivity, NSpecParsing) {
  EXPECT_EQ(NSpec::parse("1..6").resolve(2), (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(NSpec::parse("3,100").resolve(7), (std::vector<int>{3, 100}));
  EXPECT_EQ(NSpec::parse("l..l+3").resolve(2), (std::vector<int>{2, 3, 4, 5}));
  EXPECT_EQ(NSpec::parse("l-1, l+2").resolve(1), (std::vector<int>{3}));
  EXPECT_EQ(NSpec::parse("l..l+1,100").resolve(0), (std::vector<int>{1, 100}));
  EXPECT_THROW(NSpec::parse("x"), SchurError);
  EXPECT_THROW(NSpec::parse(""), SchurError);
  EXPECT_THROW(NSpec::parse("1..,2"), SchurError);
}

TEST(Positivity, SweepCells) {
  EXPECT_TRUE(conjecture1_cells(1, NSpec::parse("1..6")).empty());
  const auto cells = conjecture2_cells(2, NSpec::parse("1"));
  // (1)(1): i=1; (2)(): i=1; (1,1)(): i=1; (1)(): none.
  ASSERT_EQ(cells.size(), 3u);
  EXPECT_EQ(cells[0].factors, (std::vector<Partition>{{2}, {}}));
  EXPECT_EQ(cells[2].factors, (std::vector<Partition>{{1}, {1}}));
}

TEST(Positivity, SmallSweepsFindNothing) {
  EXPECT_TRUE(sweep_conjecture1(5, NSpec::parse("1..6"), Mode::Truncated, 1).counterexamples.empty());
  EXPECT_TRUE(sweep_conjecture1(4, NSpec::parse("100"), Mode::Truncated, 2).counterexamples.empty());
  EXPECT_TRUE(sweep_conjecture2(5, NSpec::parse("l..l+2"), Mode::Truncated, 1).counterexamples.empty());
  const auto empty = sweep_conjecture1(1, NSpec::parse("1..6"), Mode::Truncated, 1);
  EXPECT_EQ(empty.cells, 0u);
  EXPECT_THROW(sweep_conjecture1(3, NSpec::parse("1"), Mode::Truncated, 0), SchurError);
}

TEST(PositivityProperty, DifferenceAgreesWithOracle) {
  for (const auto& l : all_up_to(5))
    for (int n = std::max(1, l.length()); n <= l.length() + 1; ++n)
      for (int i = 1; i < l.size(); ++i)
        EXPECT_EQ(conjecture1_expr(l, i, n, Mode::Truncated).vector, oracle_difference(l, i, n)) << l.to_string();
}

TEST(PositivityProperty, StarIdentityHolds) {
  for (const auto& l : all_up_to(8))
    for (int n = std::max(1, l.length()); n <= l.length() + 3; ++n) {
      EXPECT_TRUE(verify_star_identity(l, n, Mode::Truncated)) << l.to_string() << " n=" << n;
      EXPECT_TRUE(verify_star_identity(l, n, Mode::Formal)) << l.to_string() << " n=" << n;
    }
}

TEST(PositivityProperty, TypeTwoThreePositive) {
  for (const auto& l : all_up_to(8))
    for (int j : corners(l)) EXPECT_TRUE(type23_check(l, j, std::max(1, l.length()))) << l.to_string() << " j=" << j;
}

TEST(PositivityProperty, VerdictTransportsUnderConjugation) {
  for (const auto& l : all_up_to(8)) {
    const Partition c = conjugate(l);
    const int n = std::max({1, l.length(), l.part(1)});
    for (int i = 1; i < l.size(); ++i)
      EXPECT_EQ(conjecture1_expr(l, i, n, Mode::Truncated).positive, conjecture1_expr(c, i, n, Mode::Truncated).positive);
  }
}

TEST(PositivityProperty, SpecialCoefficientsInsideDifference) {
  for (Family f : {Family::Hook, Family::Kk1, Family::Conj})
    for (int k = 3; k <= 5; ++k)
      for (int l = 3; l <= (f == Family::Hook ? 5 : 3); ++l) {
        const Partition lambda = family_shape(f, k, l);
        for (int n = lambda.length(); n <= lambda.length() + 3; ++n) {
          const auto formal = conjecture1_expr(lambda, 1, n, Mode::Formal).vector;
          const auto truncated = conjecture1_expr(lambda, 1, n, Mode::Truncated).vector;
          for (const auto& beta : special_partitions(f, k, l)) {
            EXPECT_EQ(formal.coefficient(beta), special_coefficient(f, k, l, n));
            if (beta.length() <= n) EXPECT_EQ(truncated.coefficient(beta), special_coefficient(f, k, l, n));
          }
        }
      }
}

TEST(PositivityProperty, ParallelKernelMatchesSerial) {
  const auto cells = conjecture2_cells(5, NSpec::parse("l..l+2"));
  const auto serial = evaluate_cells_serial(cells, Mode::Formal);
  for (int jobs : {1, 3, 8}) {
    const auto parallel = evaluate_cells_parallel(cells, Mode::Formal, jobs);
    ASSERT_EQ(parallel.size(), serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      ASSERT_EQ(parallel[i].has_value(), serial[i].has_value());
      if (serial[i]) EXPECT_EQ(parallel[i]->coeff, serial[i]->coeff);
    }
  }
}
