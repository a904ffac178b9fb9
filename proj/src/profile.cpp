#include "gpgrowth/profile.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace gpgrowth {

namespace mp = boost::multiprecision;

namespace {

using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

// Roots of a square-free polynomial in z: companion-matrix eigenvalues,
// polished by Newton's method in extended precision.
std::vector<Complex> numeric_roots(const Polynomial& f, long double tol) {
  const int d = f.degree();
  Polynomial m = f.monic();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -to_double(m.coeff(i));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw ProfileError("eigenvalue solver failed during root isolation");
  Polynomial dm = m.derivative();
  std::vector<Complex> roots;
  for (int i = 0; i < d; ++i) {
    Complex x(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    long double step = 0;
    for (int it = 0; it < 100; ++it) {
      Complex fx = m.eval(x), dfx = dm.eval(x);
      if (std::abs(dfx) == 0) break;
      Complex delta = fx / dfx;
      x -= delta;
      step = std::abs(delta);
      if (step <= tol * std::max<long double>(1, std::abs(x)) * 1e-3L) break;
    }
    if (step > tol * std::max<long double>(1, std::abs(x)))
      throw ProfileError("numeric root isolation did not converge");
    if (std::fabs(x.imag()) <= tol * std::max<long double>(1, std::abs(x))) x = Complex(x.real(), 0);
    roots.push_back(x);
  }
  return roots;
}

bool near(long double a, long double b, long double tol) {
  return std::fabs(a - b) <= tol * std::max<long double>(1, std::max(std::fabs(a), std::fabs(b)));
}

Rational rational_pow(const Rational& r, int n) {
  Rational out = 1;
  for (int i = 0; i < n; ++i) out *= r;
  return out;
}

long double ld_pow(long double x, int n) { return std::pow(x, static_cast<long double>(n)); }

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

std::optional<Rational> AsymptoticProfile::dominant_real_coefficient() const {
  if (dominant.size() != 1) return std::nullopt;
  const std::size_t i = dominant.front();
  if (exact_coefficients) return (*exact_coefficients)[i][alpha];
  return std::nullopt;
}

Complex AsymptoticProfile::closed_form(int n) const {
  Complex sum = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Complex pw = std::pow(roots[i].value, static_cast<long double>(n));
    for (int j = 0; j < roots[i].multiplicity; ++j)
      sum += coefficients[i][j] * ld_pow(static_cast<long double>(n), j) * pw;
  }
  return sum;
}

AsymptoticProfile asymptotic_profile(const RationalSeries& rf, int sample_horizon, const ProfileOptions& options) {
  const Polynomial& p = rf.numerator;
  const Polynomial& q = rf.denominator;
  if (q.degree() < 1) throw ProfileError("asymptotic profile needs a nonconstant denominator");
  if (sample_horizon < 1) throw ProfileError("sample horizon must be at least 1");
  AsymptoticProfile prof;
  prof.series = rf;
  prof.horizon = sample_horizon;

  auto add_root = [&](Complex value, int mult, bool exact, std::optional<Rational> rat, std::optional<Rational> mod) {
    ReciprocalRoot r;
    r.value = value;
    r.multiplicity = mult;
    r.exact = exact;
    r.rational_value = std::move(rat);
    r.modulus = std::abs(value);
    r.exact_modulus = std::move(mod);
    prof.roots.push_back(std::move(r));
    return prof.roots.size() - 1;
  };

  // Reciprocal roots of q are the roots of its reversal.
  for (auto [f, mult] : squarefree_decomposition(q.reversed())) {
    for (const Rational& r : rational_roots(f)) {
      Rational mod = r < 0 ? Rational(-r) : r;
      std::size_t idx = add_root(Complex(to_long_double(r), 0), mult, true, r, mod);
      prof.factors.push_back({Polynomial{Rational(1), Rational(-r)}, mult, true, {idx}});
      f = divmod(f, Polynomial{Rational(-r), Rational(1)}).first;
    }
    if (f.degree() < 1) continue;
    std::vector<Complex> numeric;
    if (f.degree() == 2) {
      Polynomial m = f.monic();
      Rational s = -m.coeff(1), prod = m.coeff(0);
      long double disc = to_long_double(s * s - 4 * prod);
      long double re = to_long_double(s) / 2;
      long double im = std::sqrt(std::fabs(disc)) / 2;
      std::optional<Rational> mod;
      if (disc < 0) mod = exact_sqrt(prod);
      std::size_t a = add_root(disc < 0 ? Complex(re, im) : Complex(re + im, 0), mult, true, std::nullopt, mod);
      std::size_t b = add_root(disc < 0 ? Complex(re, -im) : Complex(re - im, 0), mult, true, std::nullopt, mod);
      prof.factors.push_back({Polynomial{Rational(1), Rational(-s), prod}, mult, true, {a, b}});
      continue;
    }
    numeric = numeric_roots(f, options.root_tolerance);
    std::vector<bool> used(numeric.size(), false);
    for (std::size_t i = 0; i < numeric.size(); ++i) {
      for (std::size_t j = i + 1; j < numeric.size() && !used[i]; ++j) {
        if (used[j]) continue;
        Complex s = numeric[i] + numeric[j], prod = numeric[i] * numeric[j];
        if (!near(s.imag(), 0, 1e-9L) || !near(prod.imag(), 0, 1e-9L)) continue;
        Rational s_rat = rationalize(s.real(), BigInt(1000000));
        Rational p_rat = rationalize(prod.real(), BigInt(1000000));
        if (!near(to_long_double(s_rat), s.real(), 1e-9L) || !near(to_long_double(p_rat), prod.real(), 1e-9L))
          continue;
        Polynomial quad{p_rat, Rational(-s_rat), Rational(1)};
        if (!divmod(f, quad).second.is_zero()) continue;
        used[i] = used[j] = true;
        bool complex_pair = numeric[i].imag() != 0;
        std::optional<Rational> mod;
        if (complex_pair) mod = exact_sqrt(p_rat);
        std::size_t a = add_root(numeric[i], mult, true, std::nullopt, mod);
        std::size_t b = add_root(numeric[j], mult, true, std::nullopt, mod);
        prof.factors.push_back({Polynomial{Rational(1), Rational(-s_rat), p_rat}, mult, true, {a, b}});
      }
    }
    for (std::size_t i = 0; i < numeric.size(); ++i) {
      if (used[i]) continue;
      std::size_t a = add_root(numeric[i], mult, false, std::nullopt, std::nullopt);
      prof.factors.push_back({Polynomial{}, mult, false, {a}});
    }
  }

  // Dominant modulus and degree.
  prof.lambda = 0;
  for (const auto& r : prof.roots) prof.lambda = std::max(prof.lambda, r.modulus);
  std::vector<std::size_t> top;
  for (std::size_t i = 0; i < prof.roots.size(); ++i) {
    long double rel = std::fabs(prof.roots[i].modulus - prof.lambda) / prof.lambda;
    if (rel <= options.modulus_tolerance)
      top.push_back(i);
    else if (rel <= options.separation_tolerance)
      throw ProfileError("root moduli are not separated within tolerance");
  }
  prof.alpha = 0;
  for (std::size_t i : top) prof.alpha = std::max(prof.alpha, prof.roots[i].multiplicity - 1);
  for (std::size_t i : top) {
    if (prof.roots[i].multiplicity - 1 == prof.alpha) prof.dominant.push_back(i);
    if (!prof.lambda_exact && prof.roots[i].exact_modulus) prof.lambda_exact = prof.roots[i].exact_modulus;
  }
  if (prof.lambda_exact) prof.lambda = to_long_double(*prof.lambda_exact);

  // Coefficients b_{i,j}: match the closed form against the expansion.
  const int m_total = q.degree();
  prof.closed_form_start = std::max(0, p.degree() - q.degree() + 1);
  const int start = prof.closed_form_start;
  const std::vector<Rational> a = rf.expand(std::max(start + m_total, sample_horizon) + 1);
  const bool all_rational =
      std::all_of(prof.roots.begin(), prof.roots.end(), [](const ReciprocalRoot& r) { return r.rational_value.has_value(); });
  if (all_rational) {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (int n = start; n < start + m_total; ++n) {
      std::vector<Rational> row;
      for (const auto& r : prof.roots)
        for (int j = 0; j < r.multiplicity; ++j) row.push_back(rational_pow(Rational(n), j) * rational_pow(*r.rational_value, n));
      rows.push_back(std::move(row));
      rhs.push_back(a[n]);
    }
    auto sol = solve_exact(std::move(rows), std::move(rhs));
    if (!sol) throw ProfileError("exact partial-fraction system is inconsistent");
    std::vector<std::vector<Rational>> b;
    std::size_t k = 0;
    for (const auto& r : prof.roots) {
      b.emplace_back((*sol).begin() + static_cast<std::ptrdiff_t>(k),
                     (*sol).begin() + static_cast<std::ptrdiff_t>(k + r.multiplicity));
      k += r.multiplicity;
    }
    for (const auto& row : b) {
      std::vector<Complex> c;
      for (const auto& v : row) c.emplace_back(to_long_double(v), 0);
      prof.coefficients.push_back(std::move(c));
    }
    prof.exact_coefficients = std::move(b);
  } else {
    ComplexMatrix mat(m_total, m_total);
    ComplexVector rhs(m_total);
    for (int row = 0; row < m_total; ++row) {
      const int n = start + row;
      int col = 0;
      for (const auto& r : prof.roots) {
        Complex pw = std::pow(r.value, static_cast<long double>(n));
        for (int j = 0; j < r.multiplicity; ++j) mat(row, col++) = ld_pow(static_cast<long double>(n), j) * pw;
      }
      rhs(row) = Complex(to_long_double(a[n]), 0);
    }
    ComplexVector sol = mat.fullPivLu().solve(rhs);
    int col = 0;
    for (const auto& r : prof.roots) {
      std::vector<Complex> c;
      for (int j = 0; j < r.multiplicity; ++j) c.push_back(sol(col++));
      prof.coefficients.push_back(std::move(c));
    }
  }

  // Dominant coefficient sequence c_n.
  const bool dominant_rational = prof.lambda_exact && std::all_of(prof.dominant.begin(), prof.dominant.end(), [&](std::size_t i) {
                                   return prof.roots[i].rational_value.has_value();
                                 });
  std::vector<std::size_t> dom_factors;
  bool component_route = prof.lambda_exact && prof.alpha == 0;
  if (component_route) {
    for (std::size_t fi = 0; fi < prof.factors.size(); ++fi) {
      const auto& f = prof.factors[fi];
      std::size_t hits = std::count_if(f.roots.begin(), f.roots.end(),
                                       [&](std::size_t r) { return std::find(top.begin(), top.end(), r) != top.end(); });
      if (hits == 0) continue;
      if (!f.exact || hits != f.roots.size()) component_route = false;
      dom_factors.push_back(fi);
    }
  }
  prof.c_samples.reserve(sample_horizon + 1);
  if (dominant_rational) {
    const Rational lam = *prof.lambda_exact;
    std::vector<std::pair<Rational, Rational>> terms;  // (b_{i,alpha}, lambda_i / lambda)
    for (std::size_t i : prof.dominant) {
      const Rational r = *prof.roots[i].rational_value;
      Rational b;
      if (prof.exact_coefficients) {
        b = (*prof.exact_coefficients)[i][prof.alpha];
      } else {
        Polynomial lin{Rational(1), Rational(-r)};
        Polynomial rest = divmod(q, pow(lin, prof.alpha + 1)).first;
        Rational t = Rational(1) / r;
        b = p.eval(t) / rest.eval(t) / Rational(factorial(prof.alpha));
      }
      terms.emplace_back(b, r / lam);
    }
    for (int n = 0; n <= sample_horizon; ++n) {
      Rational c = 0;
      for (const auto& [b, ratio] : terms) c += b * rational_pow(ratio, n);
      prof.c_samples.push_back({Complex(to_long_double(c), 0), c});
    }
    prof.c_exact = true;
  } else if (component_route) {
    Polynomial q_dom = Polynomial::constant(1);
    for (std::size_t fi : dom_factors) q_dom = q_dom * pow(prof.factors[fi].poly, prof.factors[fi].multiplicity);
    auto [q_rest, rem] = divmod(q, q_dom);
    if (!rem.is_zero()) throw ProfileError("dominant factors do not divide the denominator");
    ExtendedGcd eg = extended_gcd(q_dom, q_rest);
    if (eg.g.degree() != 0) throw ProfileError("dominant and remaining factors are not coprime");
    Polynomial numer = divmod(p * eg.v, q_dom).second;
    RationalSeries component{numer, q_dom};
    std::vector<Rational> e = component.expand(sample_horizon);
    Rational scale = 1;
    for (int n = 0; n <= sample_horizon; ++n) {
      Rational c = e[n] / scale;
      prof.c_samples.push_back({Complex(to_long_double(c), 0), c});
      scale *= *prof.lambda_exact;
    }
    prof.c_exact = true;
  } else {
    for (int n = 0; n <= sample_horizon; ++n) {
      Complex c = 0;
      for (std::size_t i : prof.dominant)
        c += prof.coefficients[i][prof.alpha] * std::pow(prof.roots[i].value / prof.lambda, static_cast<long double>(n));
      prof.c_samples.push_back({c, std::nullopt});
    }
  }

  // Empirical constants over 1 <= n <= horizon.
  for (int n = 1; n <= sample_horizon; ++n) {
    long double ratio;
    if (prof.lambda_exact) {
      Rational r = a[n] / (rational_pow(Rational(n), prof.alpha) * rational_pow(*prof.lambda_exact, n));
      if (n == 1 || r < *prof.c_emp_exact) prof.c_emp_exact = r;
      if (n == 1 || r > *prof.d_emp_exact) prof.d_emp_exact = r;
      ratio = to_long_double(r);
    } else {
      ratio = to_long_double(a[n]) / (ld_pow(n, prof.alpha) * ld_pow(prof.lambda, n));
    }
    if (n == 1 || ratio < prof.c_emp) prof.c_emp = ratio;
    if (n == 1 || ratio > prof.d_emp) prof.d_emp = ratio;
  }
  return prof;
}

int ball_alpha(const AsymptoticProfile& sphere_profile) {
  return sphere_profile.lambda_exact && *sphere_profile.lambda_exact == 1 ? sphere_profile.alpha + 1
                                                                          : sphere_profile.alpha;
}

std::string to_string(Theorem1Verdict v) {
  switch (v) {
    case Theorem1Verdict::BoundedPositive: return "bounded-positive";
    case Theorem1Verdict::LiminfZero: return "liminf-zero";
    case Theorem1Verdict::Unbounded: return "unbounded";
  }
  return "?";
}

Theorem1Audit theorem1_audit(std::span<const BigInt> seq, const AsymptoticProfile& profile, long double tol) {
  Theorem1Audit audit;
  if (seq.size() < 2) throw ProfileError("theorem1_audit needs at least two terms");
  for (std::size_t n = 1; n < seq.size(); ++n) {
    long double ratio;
    if (profile.lambda_exact) {
      Rational r = Rational(seq[n]) / (rational_pow(Rational(static_cast<long>(n)), profile.alpha) *
                                       rational_pow(*profile.lambda_exact, static_cast<int>(n)));
      if (n == 1 || r < *audit.c_emp_exact) audit.c_emp_exact = r;
      if (n == 1 || r > *audit.d_emp_exact) audit.d_emp_exact = r;
      ratio = to_long_double(r);
    } else {
      ratio = seq[n].convert_to<long double>() / (ld_pow(n, profile.alpha) * ld_pow(profile.lambda, static_cast<int>(n)));
    }
    if (n == 1 || ratio < audit.c_emp) audit.c_emp = ratio;
    if (n == 1 || ratio > audit.d_emp) audit.d_emp = ratio;
  }
  audit.min_re_c = profile.c_samples.front().value.real();
  for (const auto& c : profile.c_samples) audit.min_re_c = std::min(audit.min_re_c, c.value.real());

  long double model = 0;
  for (std::size_t i : profile.dominant) model += std::abs(profile.coefficients[i][profile.alpha]);
  bool outgrows = false;
  for (std::size_t n = std::max<std::size_t>(1, seq.size() / 2); n < seq.size(); ++n) {
    long double ratio = seq[n].convert_to<long double>() /
                        (ld_pow(static_cast<long double>(n), profile.alpha) * ld_pow(profile.lambda, static_cast<int>(n)));
    if (ratio > 2 * model + 1) outgrows = true;
  }
  if (outgrows)
    audit.verdict = Theorem1Verdict::Unbounded;
  else if (audit.min_re_c <= tol || audit.c_emp <= 0)
    audit.verdict = Theorem1Verdict::LiminfZero;
  else
    audit.verdict = Theorem1Verdict::BoundedPositive;
  return audit;
}

CSequenceCheck c_sequence_check(const AsymptoticProfile& profile, int last, long double tol) {
  if (last < 0 || last >= static_cast<int>(profile.c_samples.size()))
    throw ProfileError("c_sequence_check beyond the sampled horizon");
  CSequenceCheck check;
  check.exact = profile.c_exact;
  if (profile.c_exact) {
    Rational min_re = *profile.c_samples.front().exact;
    for (int n = 0; n <= last; ++n) min_re = std::min(min_re, *profile.c_samples[n].exact);
    check.min_real = to_long_double(min_re);
    check.max_abs_imag = 0;
    check.pass = min_re >= 0;
    return check;
  }
  check.min_real = profile.c_samples.front().value.real();
  for (int n = 0; n <= last; ++n) {
    const Complex& c = profile.c_samples[n].value;
    check.max_abs_imag = std::max(check.max_abs_imag, std::fabs(c.imag()));
    check.min_real = std::min(check.min_real, c.real());
  }
  check.pass = check.max_abs_imag <= tol && check.min_real >= -tol;
  return check;
}

DensityGap density_gap(std::span<const CSample> samples, long double delta) {
  DensityGap gap;
  if (samples.empty()) throw ProfileError("density_gap needs samples");
  std::optional<std::size_t> prev;
  for (std::size_t n = 0; n < samples.size(); ++n) {
    long double v = samples[n].exact ? to_long_double(*samples[n].exact) : samples[n].value.real();
    if (v < delta) continue;
    if (!prev) gap.lead_in = n;
    else gap.max_gap = std::max(gap.max_gap, n - *prev);
    prev = n;
    ++gap.members;
  }
  gap.empty = gap.members == 0;
  return gap;
}

std::string to_string(ProductGrowthVerdict v) {
  switch (v) {
    case ProductGrowthVerdict::Bounded: return "bounded";
    case ProductGrowthVerdict::Unbounded: return "unbounded";
    case ProductGrowthVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

ProductGrowthCheck product_growth_check(std::span<const BigInt> seq_h, std::span<const BigInt> seq_k,
                                        const AsymptoticProfile& profile_h, const AsymptoticProfile& profile_k,
                                        long double tol) {
  const long double lh = profile_h.lambda, lk = profile_k.lambda;
  const bool equal = near(lh, lk, tol);
  if (!equal && lh < lk) throw ProfileError("product_growth_check needs lambda_H >= lambda_K");
  std::vector<BigInt> conv = convolve_spheres(seq_h, seq_k);
  ProductGrowthCheck out;
  const int ah = profile_h.alpha, ak = profile_k.alpha;
  for (std::size_t n = 1; n < conv.size(); ++n) {
    long double r = conv[n].convert_to<long double>() / (ld_pow(static_cast<long double>(n), ah) * ld_pow(lh, static_cast<int>(n)));
    out.ratios.push_back(r);
    out.d_tilde_emp = std::max(out.d_tilde_emp, r);
  }
  if (out.ratios.empty()) return out;
  if (!equal) {
    const long double rho = lk / lh;
    const long double d = std::max({1.0L, profile_h.d_emp, profile_k.d_emp});
    long double series = 0;
    for (int i = 1; i < 100000; ++i) {
      long double term = ld_pow(rho, i) * ld_pow(i, ak);
      series += term;
      if (term < 1e-20L && i > 10) break;
    }
    long double tail = 0;
    for (int n = 1; n <= std::max<int>(1000, static_cast<int>(conv.size())); ++n)
      tail = std::max(tail, ld_pow(rho, n) * std::pow(static_cast<long double>(n), static_cast<long double>(ak - ah)));
    out.bound = d * d * (1 + series + tail);
    bool ok = std::all_of(out.ratios.begin(), out.ratios.end(), [&](long double r) { return r <= out.bound; });
    out.verdict = ok ? ProductGrowthVerdict::Bounded : ProductGrowthVerdict::Inconclusive;
    return out;
  }
  const long double c = std::min(profile_h.c_emp, profile_k.c_emp);
  out.bound = c * c * std::pow(2.0L, -(ah + 2));
  const std::size_t first = out.ratios.size() >= 20 ? 20 : 1;
  bool ok = true;
  for (std::size_t n = first; n <= out.ratios.size(); ++n)
    ok = ok && out.ratios[n - 1] >= out.bound * std::pow(static_cast<long double>(n), ak / 2.0L + 1);
  ok = ok && c > 0 && out.ratios.back() > out.ratios.front();
  out.verdict = ok ? ProductGrowthVerdict::Unbounded : ProductGrowthVerdict::Inconclusive;
  return out;
}

}  // namespace gpgrowth
