#include <gtest/gtest.h>

#include <random>

#include "gpgrowth/polynomial.hpp"

using namespace gpgrowth;

namespace {

Polynomial random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(d(rng), 1 + (d(rng) + 5) % 3);
  if (c.back() == 0) c.back() = 1;
  return Polynomial(c);
}

}  // namespace

TEST(Polynomial, TrimsAndPrints) {
  Polynomial p{1, 0, -3, 0, 0};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.to_string(), "1 - 3*t^2");
  EXPECT_EQ(Polynomial{}.degree(), -1);
  EXPECT_EQ(Polynomial{}.to_string(), "0");
  EXPECT_EQ(Polynomial({1, -1}).reversed(), Polynomial({-1, 1}));
}

TEST(Polynomial, ArithmeticAndEval) {
  Polynomial a{1, 1}, b{1, -1};
  EXPECT_EQ(a * b, Polynomial({1, 0, -1}));
  EXPECT_EQ(a + b, Polynomial({2}));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ((a * b).eval(Rational(3)), Rational(-8));
  EXPECT_EQ(Polynomial({0, 0, 1}).derivative(), Polynomial({0, 2}));
  EXPECT_EQ(pow(a, 3), Polynomial({1, 3, 3, 1}));
}

TEST(Polynomial, DivmodIdentity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = random_poly(rng, 2 + trial % 5), b = random_poly(rng, 1 + trial % 3);
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(divmod(Polynomial{1}, Polynomial{}), std::domain_error);
}

TEST(Polynomial, GcdAndExtendedGcd) {
  Polynomial f{1, -2};      // 1 - 2t
  Polynomial g{1, 1, 1};    // 1 + t + t^2
  Polynomial h{3, 0, 0, 1};
  Polynomial a = f * g, b = f * h;
  EXPECT_EQ(gcd(a, b), f.monic());
  auto e = extended_gcd(a, b);
  EXPECT_EQ(e.g, f.monic());
  EXPECT_EQ(e.u * a + e.v * b, e.g);
  EXPECT_EQ(gcd(g, h), Polynomial{1});
}

TEST(Polynomial, SquarefreeDecomposition) {
  Polynomial p = Polynomial{1, -1} * pow(Polynomial{1, -3}, 2) * pow(Polynomial{1, 0, 1}, 3);
  auto parts = squarefree_decomposition(p);
  Polynomial prod{1};
  for (const auto& [f, k] : parts) {
    EXPECT_EQ(gcd(f, f.derivative()).degree(), 0);
    prod = prod * pow(f, k);
  }
  EXPECT_EQ(prod.monic(), p.monic());
  ASSERT_EQ(parts.size(), 3u);
}

TEST(Polynomial, RationalRoots) {
  Polynomial p = Polynomial{-1, 2} * Polynomial{3, 1} * Polynomial{1, 0, 1};  // roots 1/2, -3
  auto r = rational_roots(p);
  std::sort(r.begin(), r.end());
  EXPECT_EQ(r, (std::vector<Rational>{Rational(-3), Rational(1, 2)}));
  EXPECT_TRUE(rational_roots(Polynomial{-2, 0, 1}).empty());
  auto z = rational_roots(Polynomial{0, 0, 1, 1});
  std::sort(z.begin(), z.end());
  EXPECT_EQ(z, (std::vector<Rational>{Rational(-1), Rational(0)}));
}

TEST(Polynomial, RationalizeAndSqrt) {
  EXPECT_EQ(rationalize(0.333333333333L, 1000), Rational(1, 3));
  EXPECT_EQ(rationalize(-2.5L, 10), Rational(-5, 2));
  EXPECT_EQ(rationalize(3.14159265358979L, 120), Rational(355, 113));
  EXPECT_EQ(exact_sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_FALSE(exact_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(exact_sqrt(Rational(-1)).has_value());
}

TEST(Polynomial, PrimitiveIntegerCoeffs) {
  Polynomial p{Rational(1, 2), Rational(-3, 4)};
  EXPECT_EQ(p.primitive_integer_coeffs(), (std::vector<BigInt>{2, -3}));
}
