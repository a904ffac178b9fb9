#include "gpgrowth/commands.hpp"

#include <algorithm>
#include <random>

#include "gpgrowth/centraliser.hpp"
#include "gpgrowth/word_io.hpp"

namespace gpgrowth {

namespace {

struct Settings {
  int radius;
  int max_order;
  std::size_t memory_budget;
  long double tolerance;
  EnumerationOptions enumeration;
  ProfileOptions profile;
};

Settings resolve(const SpecOptions* spec, const CommandOptions& o) {
  Settings s;
  s.radius = o.radius ? *o.radius : spec && spec->radius ? *spec->radius : kDefaultRadius;
  s.max_order = o.max_order ? *o.max_order : spec && spec->max_order ? *spec->max_order : kDefaultMaxOrder;
  s.memory_budget = o.memory_budget       ? *o.memory_budget
                    : spec && spec->memory_budget ? *spec->memory_budget
                                                  : EnumerationOptions{}.memory_budget;
  s.tolerance = o.tolerance ? *o.tolerance : spec && spec->tolerance ? *spec->tolerance : kDefaultTolerance;
  if (s.radius < 0) throw InputError("radius must be nonnegative");
  if (s.max_order < 0) throw InputError("max order must be nonnegative");
  s.enumeration.memory_budget = s.memory_budget;
  s.enumeration.threads = std::max(1u, o.threads);
  return s;
}

void write_meta(Report& r, const Settings& s, const std::string& digest) {
  r.set_meta("input_digest", digest);
  r.set_meta("radius", std::to_string(s.radius));
  r.set_meta("max_order", std::to_string(s.max_order));
  r.set_meta("memory_budget", std::to_string(s.memory_budget));
  r.set_meta("tolerance", format_decimal(s.tolerance));
  r.set_meta("modulus_tolerance", format_decimal(s.profile.modulus_tolerance));
  r.set_meta("separation_tolerance", format_decimal(s.profile.separation_tolerance));
  r.set_meta("root_tolerance", format_decimal(s.profile.root_tolerance));
}

std::string str(const BigInt& x) { return x.str(); }

std::string verdict(bool pass) { return pass ? "pass" : "fail"; }

// Ball to the requested radius, or the completed part when the budget runs out.
BallIndex enumerate_or_partial(const GraphProduct& gp, const Settings& s, Report& report, int& exit_code) {
  try {
    return enumerate_ball(gp, s.radius, s.enumeration);
  } catch (const BudgetExceeded& e) {
    report.set_partial("memory budget exhausted; completed radius " + std::to_string(e.completed_radius()));
    exit_code = kExitBudget;
    return e.partial();
  }
}

std::vector<BigInt> prefix_sums(const std::vector<BigInt>& a) {
  std::vector<BigInt> out;
  BigInt total = 0;
  for (const auto& x : a) out.push_back(total += x);
  return out;
}

std::optional<RationalSeries> try_recurrence(const std::vector<BigInt>& seq, int max_order) {
  int k = std::min(max_order, max_supported_order(seq.size()));
  if (k < 0) return std::nullopt;
  return find_recurrence(seq, k);
}

void profile_fields(const AsymptoticProfile& p, std::vector<std::pair<std::string, std::string>>& f,
                    const std::string& prefix) {
  f.emplace_back(prefix + "lambda", p.lambda_exact ? to_string(*p.lambda_exact) : format_decimal(p.lambda));
  f.emplace_back(prefix + "lambda_decimal", format_decimal(p.lambda));
  f.emplace_back(prefix + "alpha", std::to_string(p.alpha));
  f.emplace_back(prefix + "dominant_roots", std::to_string(p.dominant.size()));
  if (auto b = p.dominant_real_coefficient())
    f.emplace_back(prefix + "dominant_coefficient", to_string(*b));
  else if (p.dominant.size() == 1)
    f.emplace_back(prefix + "dominant_coefficient", format_decimal(p.coefficients[p.dominant[0]][p.alpha].real()));
  f.emplace_back(prefix + "C_emp", p.c_emp_exact ? to_string(*p.c_emp_exact) : format_decimal(p.c_emp));
  f.emplace_back(prefix + "D_emp", p.d_emp_exact ? to_string(*p.d_emp_exact) : format_decimal(p.d_emp));
}

std::string csample(const CSample& c) {
  if (c.exact) return to_string(*c.exact);
  std::string out = format_decimal(c.value.real());
  if (c.value.imag() != 0) out += (c.value.imag() < 0 ? " - " : " + ") + format_decimal(std::fabs(c.value.imag())) + "i";
  return out;
}

// Audits shared by cmd_growth and cmd_series.
void sequence_audits(Report& report, const std::vector<BigInt>& seq, const AsymptoticProfile* profile,
                     long double tol) {
  std::vector<std::pair<std::string, std::string>> f;
  SubmultiplicativityResult sub = submultiplicativity_audit(seq);
  f.emplace_back("submultiplicative", sub.pass ? "yes" : "no");
  if (!sub.pass) f.emplace_back("violation", "(" + std::to_string(sub.i) + "," + std::to_string(sub.j) + ")");
  if (profile) {
    Theorem1Audit t1 = theorem1_audit(seq, *profile, tol);
    f.emplace_back("theorem1", to_string(t1.verdict));
    f.emplace_back("theorem1_C_emp", t1.c_emp_exact ? to_string(*t1.c_emp_exact) : format_decimal(t1.c_emp));
    f.emplace_back("theorem1_D_emp", t1.d_emp_exact ? to_string(*t1.d_emp_exact) : format_decimal(t1.d_emp));
    CSequenceCheck cc = c_sequence_check(*profile, static_cast<int>(profile->c_samples.size()) - 1, tol);
    f.emplace_back("c_sequence", verdict(cc.pass));
    f.emplace_back("c_sequence_min_real", format_decimal(cc.min_real));
    f.emplace_back("c_sequence_max_abs_imag", format_decimal(cc.max_abs_imag));
    f.emplace_back("c_sequence_exact", cc.exact ? "yes" : "no");
    long double delta = t1.c_emp / 2;
    if (delta <= 0) {
      long double top = 0;
      for (const auto& c : profile->c_samples) top = std::max(top, c.value.real());
      delta = top / 2;
    }
    DensityGap gap = density_gap(profile->c_samples, delta);
    f.emplace_back("density_delta", format_decimal(delta));
    f.emplace_back("density_members", std::to_string(gap.members));
    f.emplace_back("density_max_gap", gap.empty ? "none" : std::to_string(gap.max_gap));
  }
  report.add_fields("audits", f);
}

void ratio_table(Report& report, const std::vector<BigInt>& seq, const AsymptoticProfile& p, const std::string& name) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t n = 1; n < seq.size(); ++n) {
    long double denom = std::pow(static_cast<long double>(n), p.alpha) * std::pow(p.lambda, static_cast<long double>(n));
    std::string ratio;
    if (p.lambda_exact) {
      Rational scale = 1;
      for (std::size_t i = 0; i < n; ++i) scale *= *p.lambda_exact;
      for (int i = 0; i < p.alpha; ++i) scale *= static_cast<long>(n);
      ratio = format_decimal(to_long_double(Rational(seq[n]) / scale));
    } else {
      ratio = format_decimal(seq[n].convert_to<long double>() / denom);
    }
    std::string c = n < p.c_samples.size() ? csample(p.c_samples[n]) : "";
    rows.push_back({std::to_string(n), str(seq[n]), ratio, c});
  }
  report.add_table(name, {"n", "a_n", "a_n/(n^alpha lambda^n)", "c_n"}, std::move(rows));
}

}  // namespace

std::optional<std::pair<VertexSet, VertexSet>> complete_bipartite_parts(const GraphProduct& gp) {
  if (gp.vertex_count() < 2) return std::nullopt;
  auto comps = gp.complement_components(gp.all_vertices());
  if (comps.size() != 2 || comps[0].size() != comps[1].size()) return std::nullopt;
  for (VertexSet part : comps)
    for (VertexId v : part.members())
      if (!(gp.neighbours(v) & part).empty()) return std::nullopt;
  return std::make_pair(comps[0], comps[1]);
}

GrowthAnalysis analyse_growth(const GraphProduct& gp, const BallIndex& ball, int max_order,
                              const EnumerationOptions& options, const ProfileOptions& profile_options) {
  GrowthAnalysis g;
  for (auto s : ball.sphere_sizes()) g.spheres.emplace_back(s);
  g.balls = prefix_sums(g.spheres);
  if (g.spheres.size() > 1 && g.spheres.back() == 0) {
    // an empty sphere means the ball has saturated: G is finite
    std::vector<Rational> coeffs(g.spheres.begin(), g.spheres.end());
    g.series = RationalSeries{Polynomial(std::move(coeffs)), Polynomial::constant(1)};
    g.method = "finite";
  } else if (auto rf = try_recurrence(g.spheres, max_order)) {
    g.series = rf;
    g.method = "direct";
  } else if (gp.vertex_count() > 1) {
    auto comps = gp.complement_components(gp.all_vertices());
    if (comps.size() > 1) {
      RationalSeries product{Polynomial::constant(1), Polynomial::constant(1)};
      bool ok = true;
      for (VertexSet c : comps) {
        GraphProduct sub = gp.special_subgroup(c);
        auto sizes = sphere_sizes(sub, ball.radius(), options);
        auto factor = try_recurrence(to_big(sizes), max_order);
        if (!factor) {
          ok = false;
          break;
        }
        product = product * *factor;
      }
      if (ok && integer_coefficients(product, ball.radius()) == g.spheres) {
        g.series = product;
        g.method = "join-product";
      }
    }
  }
  if (!g.series) {
    g.profile_note = "no rational function found";
    return g;
  }
  g.ball_series = ball_series(*g.series);
  if (g.series->denominator.degree() < 1) {
    g.profile_note = "polynomial growth series (finite group)";
    return g;
  }
  const int horizon = std::max(1, ball.radius());
  try {
    g.sphere_profile = asymptotic_profile(*g.series, horizon, profile_options);
    g.ball_profile = asymptotic_profile(*g.ball_series, horizon, profile_options);
  } catch (const ProfileError& e) {
    g.profile_note = e.what();
  }
  return g;
}

CommandResult cmd_growth(const GroupSpec& spec, const CommandOptions& options) {
  Settings s = resolve(&spec.options, options);
  CommandResult out{Report("growth"), kExitOk};
  write_meta(out.report, s, spec.digest);
  BallIndex ball = enumerate_or_partial(spec.product, s, out.report, out.exit_code);
  GrowthAnalysis g = analyse_growth(spec.product, ball, s.max_order, s.enumeration, s.profile);

  std::vector<std::vector<std::string>> rows;
  for (std::size_t n = 0; n < g.spheres.size(); ++n) rows.push_back({std::to_string(n), str(g.spheres[n]), str(g.balls[n])});
  out.report.add_table("spheres", {"n", "sphere", "ball"}, std::move(rows));

  std::vector<std::pair<std::string, std::string>> f;
  f.emplace_back("method", g.method);
  if (g.series) {
    f.emplace_back("spherical", g.series->to_string());
    f.emplace_back("ball", g.ball_series->to_string());
  }
  if (!g.profile_note.empty()) f.emplace_back("note", g.profile_note);
  out.report.add_fields("series", f);

  if (g.sphere_profile) {
    std::vector<std::pair<std::string, std::string>> pf;
    profile_fields(*g.sphere_profile, pf, "sphere_");
    profile_fields(*g.ball_profile, pf, "ball_");
    out.report.add_fields("profile", pf);
    ratio_table(out.report, g.spheres, *g.sphere_profile, "sphere_ratios");
  }
  sequence_audits(out.report, g.spheres, g.sphere_profile ? &*g.sphere_profile : nullptr, s.tolerance);
  return out;
}

CommandResult cmd_dc(const GroupSpec& spec, const CommandOptions& options) {
  Settings s = resolve(&spec.options, options);
  CommandResult out{Report("dc"), kExitOk};
  write_meta(out.report, s, spec.digest);
  const GraphProduct& gp = spec.product;
  BallIndex ball = enumerate_or_partial(gp, s, out.report, out.exit_code);
  std::vector<Rational> d = dc_sequence(gp, ball, s.enumeration.threads);
  auto parts = complete_bipartite_parts(gp);
  std::vector<std::int64_t> ba, bl;
  if (parts) {
    ba = ball_sizes(gp.special_subgroup(parts->first), ball.radius(), s.enumeration);
    bl = ball_sizes(gp.special_subgroup(parts->second), ball.radius(), s.enumeration);
  }
  std::vector<std::string> cols{"n", "ball", "d_n", "d_n_decimal"};
  if (parts) {
    cols.push_back("lower_bound");
    cols.push_back("bound_holds");
  }
  std::vector<std::vector<std::string>> rows;
  for (int n = 0; n <= ball.radius(); ++n) {
    std::vector<std::string> row{std::to_string(n), std::to_string(ball.ball_size(n)), to_string(d[n]),
                                 format_decimal(to_long_double(d[n]))};
    if (parts) {
      Rational b = ball.ball_size(n);
      Rational lb = Rational(ba[n]) * Rational(bl[n]) / (b * b);
      row.push_back(to_string(lb));
      row.push_back(d[n] >= lb ? "yes" : "no");
    }
    rows.push_back(std::move(row));
  }
  out.report.add_table("degree_of_commutativity", cols, std::move(rows));
  if (parts)
    out.report.add_fields("lower_bound", {{"A", format_vertex_set(gp, parts->first)},
                                          {"link_A", format_vertex_set(gp, parts->second)}});
  return out;
}

CommandResult cmd_centraliser(const GroupSpec& spec, const std::string& word, const CommandOptions& options) {
  Settings s = resolve(&spec.options, options);
  const GraphProduct& gp = spec.product;
  Element g;
  try {
    g = gp.normalize(parse_word(gp, word));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("cannot parse word: ") + e.what());
  }
  if (g.is_identity()) throw InputError("word '" + word + "' is the identity; its centraliser is the whole group");
  CommandResult out{Report("centraliser"), kExitOk};
  write_meta(out.report, s, spec.digest);
  out.report.set_meta("word", word);

  CentraliserDescription desc = centraliser_structure(gp, g);
  out.report.add_fields("description", {{"element", format_element(gp, g)},
                                        {"conjugator", format_element(gp, desc.conjugator)},
                                        {"tilde", format_element(gp, desc.tilde)},
                                        {"normalizer", format_element(gp, desc.normalizer)},
                                        {"normal", format_element(gp, desc.normal)},
                                        {"support", format_vertex_set(gp, desc.tilde.support())},
                                        {"link", format_vertex_set(gp, desc.link)},
                                        {"factors", std::to_string(desc.factors.size())}});
  std::vector<std::vector<std::string>> frows;
  for (std::size_t i = 0; i < desc.factors.size(); ++i) {
    const auto& f = desc.factors[i];
    if (const auto* c = std::get_if<CyclicFactor>(&f.kind)) {
      frows.push_back({std::to_string(i), format_vertex_set(gp, f.component), "cyclic", format_element(gp, c->generator),
                       format_element(gp, c->root), std::to_string(c->beta), c->primitive ? "yes" : "no"});
    } else {
      const auto& ff = std::get<FiniteFactor>(f.kind);
      std::string elems;
      for (const auto& e : ff.elements) elems += (elems.empty() ? "" : " ") + format_element(gp, e);
      frows.push_back({std::to_string(i), format_vertex_set(gp, f.component), "finite", elems, "", "", ""});
    }
  }
  out.report.add_table("factors", {"index", "component", "kind", "generator", "root", "beta", "primitive"},
                       std::move(frows));

  try {
    auto spheres = centraliser_sphere_counts(gp, desc, s.radius, s.enumeration);
    const int oracle_radius = std::min(s.radius, 4);
    BallIndex ball = enumerate_ball(gp, oracle_radius, s.enumeration);
    std::vector<std::vector<std::string>> rows;
    std::int64_t total = 0;
    bool all_match = true;
    for (int n = 0; n <= s.radius; ++n) {
      total += spheres[n];
      std::vector<std::string> row{std::to_string(n), std::to_string(total), "", ""};
      if (n <= oracle_radius) {
        auto brute = brute_force_centraliser(gp, ball, desc.tilde, n);
        bool same = brute == expand_centraliser(gp, desc, n, s.enumeration);
        all_match = all_match && same && static_cast<std::int64_t>(brute.size()) == total;
        row[2] = std::to_string(brute.size());
        row[3] = same ? "yes" : "no";
      }
      rows.push_back(std::move(row));
    }
    out.report.add_table("ball_counts", {"n", "structural", "oracle", "sets_equal"}, std::move(rows));
    FactorAudit fa = small_centraliser_bounds_audit(gp, desc, std::max(1, s.radius));
    ConjugateBoundAudit cb = conjugate_bound_audit(gp, g, oracle_radius, s.enumeration);
    std::vector<std::pair<std::string, std::string>> audits{{"oracle_equivalence", verdict(all_match)},
                                                            {"small_centraliser_bounds", verdict(fa.pass)}};
    if (!fa.pass)
      audits.emplace_back("bound_violation", "factor " + std::to_string(fa.factor) + " n=" + std::to_string(fa.radius) +
                                                 " count=" + std::to_string(fa.count) + " bound=" + std::to_string(fa.bound));
    audits.emplace_back("conjugate_bound", verdict(cb.pass));
    audits.emplace_back("conjugate_bound_detail", "s=" + std::to_string(cb.s) + " |C(g)∩B(" + std::to_string(oracle_radius) +
                                                      ")|=" + std::to_string(cb.lhs) + " <= |C(g~)∩B(" +
                                                      std::to_string(oracle_radius + 2 * cb.s) + ")|=" + std::to_string(cb.rhs));
    out.report.add_fields("audits", audits);
  } catch (const BudgetExceeded& e) {
    out.report.set_partial(std::string(e.what()));
    out.exit_code = kExitBudget;
  }
  return out;
}

CommandResult cmd_series(const std::string& source, const CommandOptions& options) {
  Settings s = resolve(nullptr, options);
  std::vector<BigInt> seq;
  std::string digest;
  const int terms = options.radius ? *options.radius + 1 : 64;
  if (source == "example-i") {
    seq = integer_coefficients(non_submultiplicative_fixture(), terms - 1);
    digest = sha256_hex("builtin:example-i:" + std::to_string(terms));
  } else if (source == "digit-sum") {
    seq = digit_sum_sequence(terms - 1);
    digest = sha256_hex("builtin:digit-sum:" + std::to_string(terms));
  } else {
    try {
      seq = load_sequence(source);
    } catch (const SpecError& e) {
      throw InputError(e.what());
    }
    std::string text;
    for (const auto& x : seq) text += x.str() + "\n";
    digest = sha256_hex(text);
  }
  if (seq.empty()) throw InputError("empty sequence");
  s.radius = static_cast<int>(seq.size()) - 1;
  CommandResult out{Report("series"), kExitOk};
  write_meta(out.report, s, digest);
  out.report.set_meta("source", source);
  out.report.set_meta("terms", std::to_string(seq.size()));

  std::optional<RationalSeries> rf;
  int order = std::min(s.max_order, max_supported_order(seq.size()));
  if (order >= 0) rf = find_recurrence(seq, order);
  std::vector<std::pair<std::string, std::string>> f{{"searched_order", std::to_string(order)}};
  f.emplace_back("result", rf ? rf->to_string() : "none found");
  std::optional<AsymptoticProfile> prof;
  if (rf && rf->denominator.degree() >= 1) {
    try {
      prof = asymptotic_profile(*rf, static_cast<int>(seq.size()) - 1, s.profile);
    } catch (const ProfileError& e) {
      f.emplace_back("note", e.what());
    }
  }
  out.report.add_fields("recurrence", f);
  if (prof) {
    std::vector<std::pair<std::string, std::string>> pf;
    profile_fields(*prof, pf, "");
    out.report.add_fields("profile", pf);
    ratio_table(out.report, seq, *prof, "ratios");
  }
  sequence_audits(out.report, seq, prof ? &*prof : nullptr, s.tolerance);
  return out;
}

CommandResult cmd_ball(const GroupSpec& spec, const CommandOptions& options) {
  Settings s = resolve(&spec.options, options);
  CommandResult out{Report("ball"), kExitOk};
  write_meta(out.report, s, spec.digest);
  BallIndex ball = enumerate_or_partial(spec.product, s, out.report, out.exit_code);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<int, std::string>> lines;
  for (int d = 0; d <= ball.radius(); ++d)
    for (const auto& e : ball.layer(d)) lines.emplace_back(d, format_element(spec.product, e));
  std::sort(lines.begin(), lines.end());
  for (auto& [d, w] : lines) rows.push_back({std::to_string(d), w});
  out.report.add_table("ball", {"distance", "word"}, std::move(rows));
  return out;
}

CommandResult cmd_selfcheck(const GroupSpec& spec, const CommandOptions& options) {
  Settings s = resolve(&spec.options, options);
  CommandResult out{Report("selfcheck"), kExitOk};
  write_meta(out.report, s, spec.digest);
  out.report.set_meta("seed", std::to_string(options.seed));
  const GraphProduct& gp = spec.product;
  std::mt19937_64 rng(options.seed);
  const auto& gens = gp.generators();
  auto random_word = [&] {
    std::vector<Syllable> w(std::uniform_int_distribution<int>(0, 10)(rng));
    for (auto& x : w) x = gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)];
    return w;
  };
  const int trials = 300;
  int assoc = 0, inverses = 0, shuffles = 0, lengths = 0;
  for (int t = 0; t < trials; ++t) {
    auto wx = random_word(), wy = random_word(), wz = random_word();
    Element x = gp.normalize(wx), y = gp.normalize(wy), z = gp.normalize(wz);
    assoc += gp.multiply(gp.multiply(x, y), z) == gp.multiply(x, gp.multiply(y, z));
    inverses += gp.multiply(x, gp.inverse(x)).is_identity() && gp.multiply(gp.inverse(x), x).is_identity();
    // swapping adjacent letters on adjacent vertices never changes the element
    auto shuffled = wx;
    for (std::size_t i = 0; i + 1 < shuffled.size(); ++i)
      if (gp.adjacent(shuffled[i].vertex, shuffled[i + 1].vertex) && rng() % 2) std::swap(shuffled[i], shuffled[i + 1]);
    shuffles += gp.normalize(shuffled) == x;
    lengths += x.word_length() <= static_cast<std::int64_t>(wx.size()) &&
               gp.normalize(x.syllables()) == x;
  }
  auto line = [&](int ok) { return std::to_string(ok) + "/" + std::to_string(trials); };
  out.report.add_fields("checks", {{"associativity", line(assoc)},
                                   {"inverses", line(inverses)},
                                   {"shuffle_invariance", line(shuffles)},
                                   {"length_and_idempotence", line(lengths)}});
  if (assoc != trials || inverses != trials || shuffles != trials || lengths != trials) out.exit_code = 1;
  return out;
}

}  // namespace gpgrowth
