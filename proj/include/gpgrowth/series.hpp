#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpgrowth/numeric.hpp"
#include "gpgrowth/polynomial.hpp"

namespace gpgrowth {

class SeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A power series p(t)/q(t) with gcd(p, q) = 1 and q(0) = 1. p(0) equals the
/// first coefficient of the series (1 for growth series).
struct RationalSeries {
  Polynomial numerator;
  Polynomial denominator;

  // Cancels common factors and scales so that q(0) = 1.
  static RationalSeries reduced(const Polynomial& p, const Polynomial& q);

  // Coefficients a_0..a_count.
  std::vector<Rational> expand(int count) const;
  std::string to_string() const;
};

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
// Partial sums: s(t) / (1 - t).
RationalSeries ball_series(const RationalSeries& spheres);

inline constexpr int kDefaultMaxOrder = 12;

// Smallest k <= max_order such that, with deg q <= k and deg p <= k, the
// series p/q matches every supplied term. Needs at least 2*max_order + 4
// terms.
std::optional<RationalSeries> find_recurrence(std::span<const BigInt> seq, int max_order = kDefaultMaxOrder);

// Largest order find_recurrence accepts for a sequence of this length.
int max_supported_order(std::size_t length);

// Exact solution of an (over)determined system, or nullopt when
// inconsistent. Free variables are set to zero.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs);

std::vector<BigInt> convolve_spheres(std::span<const BigInt> h, std::span<const BigInt> k);

// a_n = 2^{binary digit sum of n}, n = 0..last.
std::vector<BigInt> digit_sum_sequence(int last);

// (1 + 12t^2 - 16t^3) / ((1-t)(1-2t)(1-2t+4t^2)), whose coefficients are
// c_n 2^n + 1 with c_n cycling through 0, 2, 6, 8, 6, 2.
RationalSeries non_submultiplicative_fixture();

std::vector<BigInt> integer_coefficients(const RationalSeries& rf, int count);

}  // namespace gpgrowth
