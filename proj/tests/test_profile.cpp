#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "gpgrowth/enumeration.hpp"
#include "gpgrowth/profile.hpp"

using namespace gpgrowth;

namespace {

RationalSeries rs(const Polynomial& p, const Polynomial& q) { return RationalSeries::reduced(p, q); }

AsymptoticProfile group_profile(const std::string& name, int n) {
  auto gp = fixtures::load(name).product;
  auto s = to_big(sphere_sizes(gp, n));
  auto rf = find_recurrence(s, max_supported_order(s.size()));
  EXPECT_TRUE(rf) << name;
  return asymptotic_profile(*rf, 40);
}

}  // namespace

TEST(Profile, FreeGroup) {
  auto prof = asymptotic_profile(rs({1, 1}, {1, -3}), 30);
  EXPECT_EQ(prof.lambda_exact, Rational(3));
  EXPECT_EQ(prof.alpha, 0);
  EXPECT_EQ(prof.dominant_real_coefficient(), Rational(4, 3));
  EXPECT_TRUE(prof.c_exact);
  for (const auto& c : prof.c_samples) EXPECT_EQ(*c.exact, Rational(4, 3));
  EXPECT_EQ(prof.c_emp_exact, Rational(4, 3));
  EXPECT_EQ(prof.d_emp_exact, Rational(4, 3));
  EXPECT_EQ(prof.closed_form_start, 1);
}

TEST(Profile, TwoRationalRoots) {
  auto prof = asymptotic_profile(rs({1}, Polynomial{1, -1} * Polynomial{1, -3}), 20);
  ASSERT_TRUE(prof.exact_coefficients);
  std::vector<Rational> bs;
  for (const auto& row : *prof.exact_coefficients) bs.push_back(row[0]);
  std::sort(bs.begin(), bs.end());
  EXPECT_EQ(bs, (std::vector<Rational>{Rational(-1, 2), Rational(3, 2)}));
  EXPECT_EQ(prof.dominant_real_coefficient(), Rational(3, 2));
  auto a = prof.series.expand(15);
  for (int n = prof.closed_form_start; n <= 15; ++n)
    EXPECT_NEAR(prof.closed_form(n).real(), static_cast<double>(to_long_double(a[n])), 1e-6 * std::pow(3.0, n));
}

TEST(Profile, ZSquaredPolynomialGrowth) {
  auto z = rs({1, 1}, {1, -1});
  auto prof = asymptotic_profile(z * z, 20);
  EXPECT_EQ(prof.lambda_exact, Rational(1));
  EXPECT_EQ(prof.alpha, 1);
  EXPECT_EQ(prof.dominant_real_coefficient(), Rational(4));
  EXPECT_EQ(ball_alpha(prof), 2);
  auto f2 = asymptotic_profile(rs({1, 1}, {1, -3}), 10);
  EXPECT_EQ(ball_alpha(f2), 0);
}

TEST(Profile, NonSubmultiplicativeFixture) {
  auto rf = non_submultiplicative_fixture();
  auto prof = asymptotic_profile(rf, 36);
  EXPECT_EQ(prof.lambda_exact, Rational(2));
  EXPECT_EQ(prof.alpha, 0);
  ASSERT_TRUE(prof.c_exact);
  const int cycle[6] = {0, 2, 6, 8, 6, 2};
  for (int n = 0; n <= 36; ++n) EXPECT_EQ(*prof.c_samples[n].exact, Rational(cycle[n % 6])) << n;
  auto seq = integer_coefficients(rf, 36);
  auto audit = theorem1_audit(seq, prof);
  EXPECT_EQ(audit.verdict, Theorem1Verdict::LiminfZero);
  auto check = c_sequence_check(prof, 36);
  EXPECT_TRUE(check.pass);
  EXPECT_TRUE(check.exact);
  EXPECT_EQ(check.min_real, 0);
}

TEST(Profile, SubmultiplicativityFailsOnFixture) {
  auto seq = integer_coefficients(non_submultiplicative_fixture(), 12);
  auto r = submultiplicativity_audit(seq);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.i, 1u);
  EXPECT_EQ(r.j, 6u);
}

TEST(Profile, NegativeDominantRootFailsCCheck) {
  auto prof = asymptotic_profile(rs({1}, {1, 2}), 10);
  EXPECT_EQ(prof.lambda_exact, Rational(2));
  auto check = c_sequence_check(prof, 10);
  EXPECT_FALSE(check.pass);
  EXPECT_EQ(check.min_real, -1);
}

TEST(Profile, DensityGaps) {
  auto prof = asymptotic_profile(non_submultiplicative_fixture(), 60);
  auto g2 = density_gap(prof.c_samples, 2);
  EXPECT_EQ(g2.max_gap, 2u);
  EXPECT_EQ(g2.lead_in, 1u);
  auto g7 = density_gap(prof.c_samples, 7);
  EXPECT_EQ(g7.max_gap, 6u);
  EXPECT_EQ(g7.lead_in, 3u);
  EXPECT_TRUE(density_gap(prof.c_samples, 9).empty);
  auto f2 = asymptotic_profile(rs({1, 1}, {1, -3}), 20);
  EXPECT_EQ(density_gap(f2.c_samples, 1).max_gap, 1u);
}

TEST(Profile, NumericPentagon) {
  auto prof = group_profile("pentagon_racg", 12);
  EXPECT_FALSE(prof.lambda_exact);
  EXPECT_NEAR(static_cast<double>(prof.lambda), (3 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_EQ(prof.alpha, 0);
  auto a = prof.series.expand(30);
  for (int n = prof.closed_form_start; n <= 30; ++n) {
    long double expect = to_long_double(a[n]);
    EXPECT_NEAR(static_cast<double>(prof.closed_form(n).real() / expect), 1.0, 1e-12) << n;
    EXPECT_NEAR(static_cast<double>(prof.closed_form(n).imag() / expect), 0.0, 1e-12) << n;
  }
  EXPECT_TRUE(c_sequence_check(prof, 30).pass);
  auto seq = to_big(sphere_sizes(fixtures::load("pentagon_racg").product, 12));
  EXPECT_EQ(theorem1_audit(seq, prof).verdict, Theorem1Verdict::BoundedPositive);
}

TEST(Profile, ClosedFormMatchesGroupSeries) {
  for (const auto& name : {"f2", "z2", "p3", "mixed"}) {
    auto prof = group_profile(name, 10);
    auto a = prof.series.expand(25);
    for (int n = prof.closed_form_start; n <= 25; ++n) {
      long double expect = to_long_double(a[n]);
      EXPECT_NEAR(static_cast<double>(prof.closed_form(n).real() / expect), 1.0, 1e-10) << name << " " << n;
    }
  }
}

TEST(Profile, Theorem1OnGroups) {
  for (const auto& name : {"f2", "z2", "p3", "infinite_dihedral"}) {
    auto gp = fixtures::load(name).product;
    auto seq = to_big(sphere_sizes(gp, 10));
    auto prof = group_profile(name, 10);
    auto audit = theorem1_audit(seq, prof);
    EXPECT_EQ(audit.verdict, Theorem1Verdict::BoundedPositive) << name;
    EXPECT_GT(audit.c_emp, 0) << name;
  }
}

TEST(Profile, ProductGrowth) {
  auto pf = asymptotic_profile(rs({1, 1}, {1, -3}), 30);
  auto pz = asymptotic_profile(rs({1, 1}, {1, -1}), 30);
  auto f2 = integer_coefficients(pf.series, 30);
  auto z = to_big(sphere_sizes(fixtures::load("infinite_dihedral").product, 30));
  auto fz = product_growth_check(f2, z, pf, pz);
  EXPECT_EQ(fz.verdict, ProductGrowthVerdict::Bounded);
  EXPECT_LE(fz.d_tilde_emp, fz.bound);
  EXPECT_EQ(product_growth_check(z, z, pz, pz).verdict, ProductGrowthVerdict::Unbounded);
  EXPECT_EQ(product_growth_check(f2, f2, pf, pf).verdict, ProductGrowthVerdict::Unbounded);
  EXPECT_THROW(product_growth_check(z, f2, pz, pf), ProfileError);
}

TEST(Profile, RejectsConstantDenominator) {
  EXPECT_THROW(asymptotic_profile(rs({1, 2}, {1}), 10), ProfileError);
}
