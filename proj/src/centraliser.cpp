#include "gpgrowth/centraliser.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace gpgrowth {

namespace {

void sort_elements(std::vector<Element>& v) {
  std::sort(v.begin(), v.end(), [](const Element& a, const Element& b) {
    if (a.word_length() != b.word_length()) return a.word_length() < b.word_length();
    return a < b;
  });
}

std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                   std::size_t len) {
  std::vector<std::int64_t> out(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Element> link_elements(const GraphProduct& gp, VertexSet link, int radius,
                                   const EnumerationOptions& options) {
  if (link.empty()) return {gp.identity()};
  GraphProduct sub = gp.special_subgroup(link);
  BallIndex ball = enumerate_ball(sub, radius, options);
  std::vector<Element> out;
  for (const auto& h : ball.elements(radius)) out.push_back(gp.embed(sub, link, h));
  return out;
}

}  // namespace

PrimitiveRoot primitive_root(const GraphProduct& gp, const Element& g) {
  if (g.is_identity()) throw CentraliserError("primitive root of the identity");
  if (g.support().size() < 2) throw CentraliserError("primitive root needs support of size at least 2");
  if (!gp.is_cyclically_normal(g)) throw CentraliserError("primitive root needs a cyclically normal element");
  if (gp.complement_components(g.support()).size() != 1)
    throw CentraliserError("primitive root needs a connected complement support");

  std::map<VertexId, std::int64_t> per_vertex;
  for (const auto& s : g.syllables()) ++per_vertex[s.vertex];
  std::int64_t period = 0;
  for (const auto& [v, m] : per_vertex) period = std::gcd(period, m);

  for (std::int64_t beta = period; beta >= 2; --beta) {
    if (period % beta) continue;
    // h^beta lists the syllables of h once per copy on every vertex, so h is
    // the subsequence of the first m_v / beta syllables on each vertex v.
    std::map<VertexId, std::int64_t> taken;
    std::vector<Syllable> candidate;
    for (const auto& s : g.syllables())
      if (taken[s.vertex]++ < per_vertex[s.vertex] / beta) candidate.push_back(s);
    Element h = gp.normalize(candidate);
    if (gp.power(h, beta) == g) return {h, beta};
  }
  return {g, 1};
}

CentraliserDescription centraliser_structure(const GraphProduct& gp, const Element& g) {
  if (g.is_identity()) throw CentraliserError("centraliser of the identity is the whole group");
  CentraliserDescription desc;
  CyclicReduction red = gp.cyclically_reduce(g);
  desc.conjugator = red.conjugator;
  desc.tilde = red.reduced;
  CyclicNormalization norm = gp.cyclically_normalize(desc.tilde);
  desc.normalizer = norm.conjugator;
  desc.normal = norm.normal;

  VertexSet seen;
  for (std::size_t i : gp.back_syllables(desc.tilde)) {
    VertexId v = desc.tilde.syllables()[i].vertex;
    if (seen.contains(v)) throw std::logic_error("two final letters of g~ on one vertex");
    seen.insert(v);
  }

  const VertexSet a = desc.tilde.support();
  for (VertexSet comp : gp.complement_components(a)) {
    CentraliserFactor factor;
    factor.component = comp;
    if (comp.size() == 1) {
      const VertexId v = comp.members().front();
      const VertexGroup& vg = gp.group(v);
      Element part = gp.restrict(desc.tilde, comp);
      if (part.syllable_length() != 1) throw std::logic_error("singleton component with several syllables");
      const Letter x = part.syllables().front().letter;
      if (!vg.is_finite()) {
        Element gen = gp.syllable(v, 1);
        factor.kind = CyclicFactor{gen, gen, gp.identity(), x < 0 ? -x : x, true};
      } else {
        FiniteFactor f;
        f.vertex = v;
        for (Letter y : vg.centraliser(x).elements) f.elements.push_back(gp.syllable(v, y));
        sort_elements(f.elements);
        factor.kind = std::move(f);
      }
    } else {
      PrimitiveRoot pr = primitive_root(gp, gp.restrict(desc.normal, comp));
      Element p_i = gp.restrict(desc.normalizer, comp);
      Element gen = gp.conjugate(gp.inverse(p_i), pr.root);
      factor.kind = CyclicFactor{gen, pr.root, p_i, pr.beta, true};
    }
    desc.factors.push_back(std::move(factor));
  }
  desc.link = gp.link(a);

  for (const auto& f : desc.factors) {
    if (const auto* c = std::get_if<CyclicFactor>(&f.kind)) {
      if (!gp.commutes(c->generator, desc.tilde)) throw std::logic_error("cyclic factor does not commute with g~");
    } else {
      for (const auto& e : std::get<FiniteFactor>(f.kind).elements)
        if (!gp.commutes(e, desc.tilde)) throw std::logic_error("finite factor does not commute with g~");
    }
  }
  return desc;
}

std::vector<Element> factor_elements(const GraphProduct& gp, const CentraliserFactor& factor, int radius) {
  std::vector<Element> out;
  if (const auto* f = std::get_if<FiniteFactor>(&factor.kind)) {
    for (const auto& e : f->elements)
      if (e.word_length() <= radius) out.push_back(e);
    return out;
  }
  const auto& c = std::get<CyclicFactor>(factor.kind);
  out.push_back(gp.identity());
  const std::int64_t step = c.root.word_length(), slack = 2 * c.conjugator.word_length();
  for (std::int64_t gamma = 1; gamma * step - slack <= radius; ++gamma) {
    Element x = gp.power(c.generator, gamma);
    if (x.word_length() > radius) continue;
    out.push_back(x);
    out.push_back(gp.inverse(x));
  }
  sort_elements(out);
  return out;
}

std::vector<std::int64_t> factor_sphere_counts(const GraphProduct& gp, const CentraliserFactor& factor, int radius) {
  std::vector<std::int64_t> counts(radius + 1, 0);
  for (const auto& e : factor_elements(gp, factor, radius)) ++counts[e.word_length()];
  return counts;
}

std::vector<std::int64_t> centraliser_sphere_counts(const GraphProduct& gp, const CentraliserDescription& desc,
                                                    int radius, const EnumerationOptions& options) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  const std::size_t len = radius + 1;
  std::vector<std::int64_t> counts(len, 0);
  counts[0] = 1;
  for (const auto& f : desc.factors) counts = convolve(counts, factor_sphere_counts(gp, f, radius), len);
  if (!desc.link.empty()) {
    std::vector<std::int64_t> link = sphere_sizes(gp.special_subgroup(desc.link), radius, options);
    counts = convolve(counts, link, len);
  }
  return counts;
}

std::int64_t centraliser_ball_count(const GraphProduct& gp, const CentraliserDescription& desc, int radius,
                                    const EnumerationOptions& options) {
  auto counts = centraliser_sphere_counts(gp, desc, radius, options);
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::vector<Element> expand_centraliser(const GraphProduct& gp, const CentraliserDescription& desc, int radius,
                                        const EnumerationOptions& options) {
  std::vector<Element> acc{gp.identity()};
  auto combine = [&](const std::vector<Element>& parts) {
    std::vector<Element> next;
    for (const auto& x : acc)
      for (const auto& y : parts) {
        if (x.word_length() + y.word_length() > radius) continue;
        Element xy = gp.multiply(x, y);
        if (xy.word_length() != x.word_length() + y.word_length())
          throw std::logic_error("centraliser factor lengths are not additive");
        next.push_back(std::move(xy));
      }
    acc = std::move(next);
  };
  for (const auto& f : desc.factors) combine(factor_elements(gp, f, radius));
  combine(link_elements(gp, desc.link, radius, options));
  sort_elements(acc);
  if (std::adjacent_find(acc.begin(), acc.end()) != acc.end())
    throw std::logic_error("centraliser factors are not independent");
  return acc;
}

std::vector<Element> brute_force_centraliser(const GraphProduct& gp, const BallIndex& ball, const Element& g, int n) {
  std::vector<Element> out;
  for (const auto& x : ball.elements(n))
    if (gp.commutes(x, g)) out.push_back(x);
  sort_elements(out);
  return out;
}

FactorAudit audit_factor_counts(std::span<const std::int64_t> ball_counts, std::int64_t constant,
                                std::int64_t exponent) {
  FactorAudit audit;
  for (std::size_t n = 1; n < ball_counts.size(); ++n) {
    std::int64_t bound = constant;
    for (std::int64_t i = 0; i < exponent; ++i) bound *= static_cast<std::int64_t>(n);
    if (ball_counts[n] > bound) return {false, 0, static_cast<int>(n), ball_counts[n], bound};
  }
  return audit;
}

FactorAudit small_centraliser_bounds_audit(const GraphProduct& gp, const CentraliserDescription& desc, int horizon) {
  if (horizon < 1) throw std::invalid_argument("audit horizon must be at least 1");
  for (std::size_t i = 0; i < desc.factors.size(); ++i) {
    const auto& f = desc.factors[i];
    std::vector<std::int64_t> balls = factor_sphere_counts(gp, f, horizon);
    std::partial_sum(balls.begin(), balls.end(), balls.begin());
    std::int64_t constant = 3;
    if (const auto* ff = std::get_if<FiniteFactor>(&f.kind)) constant = gp.group(ff->vertex).order();
    FactorAudit a = audit_factor_counts(balls, constant, 1);
    if (!a.pass) {
      a.factor = i;
      return a;
    }
  }
  return {};
}

ConjugateBoundAudit conjugate_bound_audit(const GraphProduct& gp, const Element& g, int n,
                                          const EnumerationOptions& options) {
  ConjugateBoundAudit audit;
  CentraliserDescription desc = centraliser_structure(gp, g);
  audit.s = desc.conjugator.word_length();
  BallIndex ball = enumerate_ball(gp, n, options);
  audit.lhs = static_cast<std::int64_t>(brute_force_centraliser(gp, ball, g, n).size());
  audit.rhs = centraliser_ball_count(gp, desc, n + 2 * static_cast<int>(audit.s), options);
  audit.pass = audit.lhs <= audit.rhs;
  return audit;
}

}  // namespace gpgrowth
