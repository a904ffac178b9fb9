#include "gpgrowth/series.hpp"

#include <algorithm>
#include <bit>

namespace gpgrowth {

namespace mp = boost::multiprecision;

RationalSeries RationalSeries::reduced(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero() || q.coeff(0) == 0) throw SeriesError("denominator must have a nonzero constant term");
  Polynomial g = gcd(p, q);
  Polynomial num = p, den = q;
  if (g.degree() >= 1) {
    num = divmod(p, g).first;
    den = divmod(q, g).first;
  }
  Rational q0 = den.coeff(0);
  Rational scale = Rational(1) / q0;
  return {scale * num, scale * den};
}

std::vector<Rational> RationalSeries::expand(int count) const {
  std::vector<Rational> a;
  if (count < 0) return a;
  const Rational q0 = denominator.coeff(0);
  const int dq = denominator.degree();
  for (int n = 0; n <= count; ++n) {
    Rational v = numerator.coeff(n);
    for (int i = 1; i <= std::min(n, dq); ++i) v -= denominator.coeffs()[i] * a[n - i];
    a.push_back(v / q0);
  }
  return a;
}

std::string RationalSeries::to_string() const {
  return "(" + numerator.to_string() + ") / (" + denominator.to_string() + ")";
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  return RationalSeries::reduced(a.numerator * b.numerator, a.denominator * b.denominator);
}

RationalSeries ball_series(const RationalSeries& spheres) {
  return RationalSeries::reduced(spheres.numerator, spheres.denominator * Polynomial{1, -1});
}

std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs) {
  const std::size_t m = rows.size();
  const std::size_t n = m ? rows.front().size() : 0;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    Rational inv = Rational(1) / rows[r][c];
    for (std::size_t j = c; j < n; ++j) rows[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < n; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = rhs[i];
  return x;
}

int max_supported_order(std::size_t length) {
  return length < 4 ? -1 : static_cast<int>((length - 4) / 2);
}

std::optional<RationalSeries> find_recurrence(std::span<const BigInt> seq, int max_order) {
  if (max_order < 0) throw SeriesError("max_order must be nonnegative");
  if (seq.size() < static_cast<std::size_t>(2 * max_order + 4))
    throw SeriesError("sequence of " + std::to_string(seq.size()) + " terms is too short for order " +
                      std::to_string(max_order) + " (needs " + std::to_string(2 * max_order + 4) + ")");
  const int len = static_cast<int>(seq.size());
  for (int k = 0; k <= max_order; ++k) {
    // a_n + sum_{i=1..k} q_i a_{n-i} = 0 for every n > k
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (int n = k + 1; n < len; ++n) {
      std::vector<Rational> row(k);
      for (int i = 1; i <= k; ++i) row[i - 1] = Rational(seq[n - i]);
      rows.push_back(std::move(row));
      rhs.push_back(Rational(-seq[n]));
    }
    std::optional<std::vector<Rational>> sol;
    if (k == 0) {
      bool zero = std::all_of(rhs.begin(), rhs.end(), [](const Rational& v) { return v == 0; });
      if (zero) sol = std::vector<Rational>{};
    } else {
      sol = solve_exact(std::move(rows), std::move(rhs));
    }
    if (!sol) continue;
    std::vector<Rational> q(k + 1);
    q[0] = 1;
    for (int i = 1; i <= k; ++i) q[i] = (*sol)[i - 1];
    std::vector<Rational> p(k + 1);
    for (int n = 0; n <= k; ++n) {
      Rational v(seq[n]);
      for (int i = 1; i <= n; ++i) v += q[i] * Rational(seq[n - i]);
      p[n] = v;
    }
    return RationalSeries::reduced(Polynomial(std::move(p)), Polynomial(std::move(q)));
  }
  return std::nullopt;
}

std::vector<BigInt> convolve_spheres(std::span<const BigInt> h, std::span<const BigInt> k) {
  if (h.size() != k.size()) throw SeriesError("convolve_spheres needs sequences of equal length");
  std::vector<BigInt> out(h.size(), BigInt(0));
  for (std::size_t n = 0; n < h.size(); ++n)
    for (std::size_t i = 0; i <= n; ++i) out[n] += h[n - i] * k[i];
  return out;
}

std::vector<BigInt> digit_sum_sequence(int last) {
  std::vector<BigInt> out;
  for (int n = 0; n <= last; ++n) out.push_back(BigInt(1) << std::popcount(static_cast<unsigned>(n)));
  return out;
}

RationalSeries non_submultiplicative_fixture() {
  Polynomial p{1, 0, 12, -16};
  Polynomial q = Polynomial{1, -1} * Polynomial{1, -2} * Polynomial{1, -2, 4};
  return RationalSeries::reduced(p, q);
}

std::vector<BigInt> integer_coefficients(const RationalSeries& rf, int count) {
  std::vector<BigInt> out;
  for (const auto& c : rf.expand(count)) {
    if (mp::denominator(c) != 1) throw SeriesError("series has a non-integer coefficient");
    out.push_back(mp::numerator(c));
  }
  return out;
}

}  // namespace gpgrowth
