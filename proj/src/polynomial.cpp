#include "gpgrowth/polynomial.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace gpgrowth {

namespace mp = boost::multiprecision;

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rational(0);
}

Rational Polynomial::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

std::complex<long double> Polynomial::eval(std::complex<long double> x) const {
  std::complex<long double> r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + to_long_double(*it);
  return r;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational lead = leading();
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::reversed() const {
  return Polynomial(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

std::vector<BigInt> Polynomial::primitive_integer_coeffs() const {
  BigInt l = 1;
  for (const auto& c : coeffs_) l = mp::lcm(l, mp::denominator(c));
  std::vector<BigInt> out;
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    BigInt v = mp::numerator(c) * (l / mp::denominator(c));
    out.push_back(v);
    g = mp::gcd(g, v);
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& k, const Polynomial& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x *= k;
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    bool unit = mag == 1 && i > 0;
    if (!unit) out += gpgrowth::to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
  const Rational lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational f = rem[i] / lead;
    quot[i - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1, t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = Rational(1) / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

Polynomial pow(const Polynomial& p, int k) {
  Polynomial r = Polynomial::constant(1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<std::pair<Polynomial, int>> out;
  Polynomial f = p.monic();
  Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = divmod(f, a).first;
  Polynomial c = divmod(fp, a).first;
  Polynomial d = c - b.derivative();
  for (int k = 1; b.degree() >= 1; ++k) {
    Polynomial g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, k);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

namespace {

std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n > BigInt(1000000000000LL)) throw std::domain_error("coefficient too large for rational root search");
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<BigInt> c = p.primitive_integer_coeffs();
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  if (low + 1 >= c.size()) return roots;
  std::set<Rational> found;
  for (const BigInt& num : divisors(c[low]))
    for (const BigInt& den : divisors(c.back()))
      for (int sign : {1, -1}) {
        Rational r(num * sign, den);
        if (!found.count(r) && p.eval(r) == 0) found.insert(r);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

Rational rationalize(long double x, const BigInt& max_den) {
  // continued-fraction convergents
  BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double v = x;
  for (int it = 0; it < 64; ++it) {
    long double a = std::floor(v);
    BigInt ai(static_cast<long long>(a));
    BigInt h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    long double frac = v - a;
    if (std::fabs(frac) < 1e-18L) break;
    v = 1.0L / frac;
    if (std::fabs(v) > 1e18L) break;
  }
  if (k1 == 0) return Rational(BigInt(static_cast<long long>(std::llround(x))));
  return Rational(h1, k1);
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  BigInt n = mp::numerator(r), d = mp::denominator(r);
  BigInt sn = mp::sqrt(n), sd = mp::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace gpgrowth
