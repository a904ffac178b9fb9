#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpgrowth/numeric.hpp"
#include "gpgrowth/polynomial.hpp"
#include "gpgrowth/series.hpp"

namespace gpgrowth {

using Complex = std::complex<long double>;

class ProfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProfileOptions {
  // Relative tolerance for two root moduli to count as equal.
  long double modulus_tolerance = 1e-8L;
  // Moduli closer than this (relative) but farther than modulus_tolerance
  // are reported as unseparated.
  long double separation_tolerance = 1e-5L;
  // Accepted relative Newton step for numerically isolated roots.
  long double root_tolerance = 1e-12L;
};

/// Factor of q(t) over the rationals: (1 - r t) for a rational reciprocal
/// root r, (1 - s t + P t^2) for an exactly detected quadratic, or a single
/// numerically isolated linear factor (exact = false).
struct DenominatorFactor {
  Polynomial poly;  // in t; empty for numeric factors
  int multiplicity = 1;
  bool exact = false;
  std::vector<std::size_t> roots;  // indices into AsymptoticProfile::roots
};

struct ReciprocalRoot {
  Complex value;  // lambda_i, a reciprocal root of q
  int multiplicity = 1;
  bool exact = false;
  std::optional<Rational> rational_value;
  long double modulus = 0;
  std::optional<Rational> exact_modulus;
};

struct CSample {
  Complex value;
  std::optional<Rational> exact;
};

/// Closed form a_n = sum_i sum_j b_{i,j} n^j lambda_i^n (valid for n beyond
/// the polynomial part) and its dominant behaviour n^alpha lambda^n c_n.
struct AsymptoticProfile {
  RationalSeries series;
  std::vector<ReciprocalRoot> roots;
  std::vector<DenominatorFactor> factors;
  long double lambda = 0;
  std::optional<Rational> lambda_exact;
  int alpha = 0;
  std::vector<std::size_t> dominant;  // roots with modulus lambda and multiplicity alpha + 1
  // b[i][j] for j = 0..multiplicity-1.
  std::vector<std::vector<Complex>> coefficients;
  std::optional<std::vector<std::vector<Rational>>> exact_coefficients;
  // Closed form holds for n >= closed_form_start.
  int closed_form_start = 0;
  std::vector<CSample> c_samples;  // n = 0..horizon
  bool c_exact = false;
  long double c_emp = 0, d_emp = 0;
  std::optional<Rational> c_emp_exact, d_emp_exact;
  int horizon = 0;

  // b_{i,alpha} for the dominant roots, exact when available.
  std::optional<Rational> dominant_real_coefficient() const;
  Complex closed_form(int n) const;
};

// Profile of the coefficient sequence of rf. Requires a nonconstant q.
AsymptoticProfile asymptotic_profile(const RationalSeries& rf, int sample_horizon, const ProfileOptions& options = {});

// Degree for the ball sequence derived from a sphere profile: alpha + 1 when
// lambda = 1 exactly, alpha otherwise.
int ball_alpha(const AsymptoticProfile& sphere_profile);

enum class Theorem1Verdict { BoundedPositive, LiminfZero, Unbounded };
std::string to_string(Theorem1Verdict v);

struct Theorem1Audit {
  Theorem1Verdict verdict = Theorem1Verdict::BoundedPositive;
  long double c_emp = 0, d_emp = 0;
  std::optional<Rational> c_emp_exact, d_emp_exact;
  long double min_re_c = 0;
};

// a_n / (n^alpha lambda^n) over 1 <= n < seq.size(), judged against the
// dominant coefficients c_n of the profile.
Theorem1Audit theorem1_audit(std::span<const BigInt> seq, const AsymptoticProfile& profile, long double tol = 1e-9L);

struct CSequenceCheck {
  bool pass = true;
  long double max_abs_imag = 0;
  long double min_real = 0;
  bool exact = false;
};

// |Im c_n| <= tol and Re c_n >= -tol for 0 <= n <= last (tolerance zero
// when the samples are exact).
CSequenceCheck c_sequence_check(const AsymptoticProfile& profile, int last, long double tol = 1e-9L);

struct DensityGap {
  bool empty = true;
  std::size_t members = 0;
  std::size_t max_gap = 0;  // largest distance between consecutive members
  std::size_t lead_in = 0;  // index of the first member
};

DensityGap density_gap(std::span<const CSample> samples, long double delta);

enum class ProductGrowthVerdict { Bounded, Unbounded, Inconclusive };
std::string to_string(ProductGrowthVerdict v);

struct ProductGrowthCheck {
  ProductGrowthVerdict verdict = ProductGrowthVerdict::Inconclusive;
  std::vector<long double> ratios;  // conv_n / (n^alpha_H lambda_H^n), n = 1..
  long double d_tilde_emp = 0;      // max ratio
  long double bound = 0;            // upper bound (lambda_H > lambda_K) or lower-bound constant
};

// H x K sphere growth relative to n^alpha_H lambda_H^n. Needs lambda_H >= lambda_K.
ProductGrowthCheck product_growth_check(std::span<const BigInt> seq_h, std::span<const BigInt> seq_k,
                                        const AsymptoticProfile& profile_h, const AsymptoticProfile& profile_k,
                                        long double tol = 1e-8L);

}  // namespace gpgrowth
