#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gpgrowth/enumeration.hpp"
#include "gpgrowth/series.hpp"

using namespace gpgrowth;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> v) {
  std::vector<BigInt> out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Series, ReducedCancelsAndNormalises) {
  auto rf = RationalSeries::reduced(Polynomial{2, 2} * Polynomial{1, -1}, Polynomial{2, -2} * Polynomial{1, -1});
  EXPECT_EQ(rf.numerator, Polynomial({1, 1}));
  EXPECT_EQ(rf.denominator, Polynomial({1, -1}));
  EXPECT_EQ(rf.to_string(), "(1 + t) / (1 - t)");
}

TEST(Series, ExpandKnown) {
  auto inv_sq = RationalSeries::reduced(Polynomial{1}, Polynomial{1, -2, 1});
  EXPECT_EQ(inv_sq.expand(3), (std::vector<Rational>{1, 2, 3, 4}));
  EXPECT_EQ(integer_coefficients(non_submultiplicative_fixture(), 7), big({1, 5, 25, 65, 97, 65, 1, 257}));
}

TEST(Series, FindRecurrenceOnGroups) {
  auto z = find_recurrence(big({1, 2, 2, 2, 2, 2, 2, 2, 2, 2}), 3);
  ASSERT_TRUE(z);
  EXPECT_EQ(z->to_string(), "(1 + t) / (1 - t)");
  auto f2 = find_recurrence(to_big(sphere_sizes(fixtures::load("f2").product, 9)), 3);
  ASSERT_TRUE(f2);
  EXPECT_EQ(f2->numerator, Polynomial({1, 1}));
  EXPECT_EQ(f2->denominator, Polynomial({1, -3}));
}

TEST(Series, FindRecurrenceOnFixture) {
  auto rf = non_submultiplicative_fixture();
  EXPECT_EQ(rf.numerator, Polynomial({1, 0, 12, -16}));
  EXPECT_EQ(rf.denominator, (Polynomial{1, -1} * Polynomial{1, -2} * Polynomial{1, -2, 4}));
  auto found = find_recurrence(integer_coefficients(rf, 40), 6);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->numerator, rf.numerator);
  EXPECT_EQ(found->denominator, rf.denominator);
}

TEST(Series, RoundTripRandomRationalFunctions) {
  std::vector<std::pair<Polynomial, Polynomial>> cases{
      {Polynomial{1, 3, -1}, Polynomial{1, -1, -1}},
      {Polynomial{1, 0, 0, 2}, Polynomial{1, 0, -4}},
      {Polynomial{1, 5}, pow(Polynomial{1, -2}, 3)},
  };
  for (const auto& [p, q] : cases) {
    auto rf = RationalSeries::reduced(p, q);
    auto back = find_recurrence(integer_coefficients(rf, 29), 5);
    ASSERT_TRUE(back);
    EXPECT_EQ(back->numerator, rf.numerator);
    EXPECT_EQ(back->denominator, rf.denominator);
  }
}

TEST(Series, TooShortAndNoneFound) {
  EXPECT_THROW(find_recurrence(big({1, 2, 3}), 3), SeriesError);
  EXPECT_EQ(max_supported_order(10), 3);
  EXPECT_FALSE(find_recurrence(digit_sum_sequence(63), 8).has_value());
}

TEST(Series, DigitSumSequence) {
  auto a = digit_sum_sequence(8);
  EXPECT_EQ(a[7], 8);
  EXPECT_EQ(a[8], 2);
  EXPECT_EQ(a[0], 1);
}

TEST(Series, ProductAndBallSeries) {
  auto z = RationalSeries::reduced(Polynomial{1, 1}, Polynomial{1, -1});
  auto z2 = z * z;
  EXPECT_EQ(integer_coefficients(z2, 4), big({1, 4, 8, 12, 16}));
  EXPECT_EQ(integer_coefficients(ball_series(z), 4), big({1, 3, 5, 7, 9}));
}

TEST(Series, ConvolveSpheres) {
  auto f = to_big(sphere_sizes(fixtures::load("f2").product, 4));
  auto z = to_big(sphere_sizes(fixtures::load("infinite_dihedral").product, 4));
  EXPECT_EQ(convolve_spheres(f, f)[2], 40);
  std::vector<BigInt> delta(f.size(), BigInt(0));
  delta[0] = 1;
  EXPECT_EQ(convolve_spheres(f, delta), f);
  EXPECT_EQ(convolve_spheres(f, z), convolve_spheres(z, f));
  EXPECT_THROW(convolve_spheres(f, std::vector<BigInt>{1}), SeriesError);
  EXPECT_EQ(convolve_spheres(f, z)[1], 6);
}

TEST(Series, SolveExact) {
  auto s = solve_exact({{1, 1}, {1, -1}, {2, 0}}, {3, 1, 4});
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, (std::vector<Rational>{2, 1}));
  EXPECT_FALSE(solve_exact({{1, 1}, {1, 1}}, {1, 2}).has_value());
}
