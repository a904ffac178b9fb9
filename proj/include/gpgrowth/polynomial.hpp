#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpgrowth/numeric.hpp"

namespace gpgrowth {

/// Dense univariate polynomial with exact rational coefficients, stored low
/// degree first with no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational eval(const Rational& x) const;
  std::complex<long double> eval(std::complex<long double> x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  // t^deg * p(1/t)
  Polynomial reversed() const;
  // Scaled by the lcm of denominators and divided by the content.
  std::vector<BigInt> primitive_integer_coeffs() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Monic gcd (zero when both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// (g, u, v) with u a + v b = g = gcd(a, b) monic.
struct ExtendedGcd {
  Polynomial g, u, v;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, int k);

// Yun's square-free decomposition of a nonconstant polynomial:
// p = c * prod_k f_k^k with each f_k monic and square-free.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

// Rational roots of p (each listed once).
std::vector<Rational> rational_roots(const Polynomial& p);

// Best rational approximation with denominator <= max_den.
Rational rationalize(long double x, const BigInt& max_den);

// sqrt of r when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

}  // namespace gpgrowth
