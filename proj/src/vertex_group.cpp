#include "gpgrowth/vertex_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

namespace gpgrowth {

namespace {

constexpr int kMaxTableOrder = 200;

std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

VertexGroup VertexGroup::infinite_cyclic() {
  VertexGroup vg;
  vg.kind_ = VertexGroupKind::InfiniteCyclic;
  vg.order_ = 0;
  vg.identity_ = 0;
  vg.generators_ = {-1, 1};
  return vg;
}

VertexGroup VertexGroup::cyclic(int order) {
  if (order < 2) throw VertexGroupError("cyclic group order must be at least 2");
  if (order > kMaxTableOrder) throw VertexGroupError("cyclic group order exceeds 200");
  std::vector<std::vector<int>> mult(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) mult[a][b] = (a + b) % order;
  std::vector<int> gens = {1};
  if (order > 2) gens.push_back(order - 1);
  VertexGroup vg = from_table(std::move(mult), std::move(gens));
  vg.power_ids_ = true;
  return vg;
}

VertexGroup VertexGroup::dihedral(int n) {
  if (n < 2) throw VertexGroupError("dihedral group needs n >= 2");
  if (2 * n > kMaxTableOrder) throw VertexGroupError("dihedral group order exceeds 200");
  const int order = 2 * n;
  // r^a s^e with e in {0,1}; id = e*n + a. s r^a = r^-a s.
  auto id = [n](int a, int e) { return e * n + ((a % n) + n) % n; };
  std::vector<std::vector<int>> mult(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      int a1 = x % n, e1 = x / n, a2 = y % n, e2 = y / n;
      // (r^a1 s^e1)(r^a2 s^e2) = r^(a1 + (-1)^e1 a2) s^(e1+e2)
      int a = e1 ? a1 - a2 : a1 + a2;
      mult[x][y] = id(a, (e1 + e2) % 2);
    }
  }
  std::vector<int> gens = {1, n};
  if (n > 2) gens.push_back(n - 1);
  return from_table(std::move(mult), std::move(gens));
}

VertexGroup VertexGroup::symmetric(int degree) {
  if (degree == 3) return from_permutations({{1, 0, 2}, {0, 2, 1}});
  if (degree == 4) return from_permutations({{1, 0, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}});
  throw VertexGroupError("built-in symmetric groups are S_3 and S_4");
}

VertexGroup VertexGroup::from_permutations(const std::vector<std::vector<int>>& generators) {
  if (generators.empty()) throw VertexGroupError("need at least one permutation");
  const std::size_t degree = generators.front().size();
  using Perm = std::vector<int>;
  Perm identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  for (const auto& g : generators) {
    if (g.size() != degree) throw VertexGroupError("permutations of different degrees");
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity) throw VertexGroupError("not a permutation");
  }
  auto compose = [](const Perm& a, const Perm& b) {
    // apply a first, then b
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
  };
  std::map<Perm, int> index;
  std::vector<Perm> elements;
  index[identity] = 0;
  elements.push_back(identity);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Perm next = compose(elements[head], g);
      if (!index.count(next)) {
        if (static_cast<int>(elements.size()) >= kMaxTableOrder)
          throw VertexGroupError("permutation group order exceeds 200");
        index[next] = static_cast<int>(elements.size());
        elements.push_back(next);
      }
    }
  }
  const int order = static_cast<int>(elements.size());
  std::vector<std::vector<int>> mult(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) mult[a][b] = index.at(compose(elements[a], elements[b]));
  std::vector<int> gens;
  for (const auto& g : generators) {
    int gi = index.at(g);
    gens.push_back(gi);
    Perm inv(degree);
    for (std::size_t i = 0; i < degree; ++i) inv[g[i]] = static_cast<int>(i);
    gens.push_back(index.at(inv));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens.erase(std::remove(gens.begin(), gens.end(), 0), gens.end());
  return from_table(std::move(mult), std::move(gens));
}

VertexGroup VertexGroup::from_table(std::vector<std::vector<int>> mult, std::vector<int> generators) {
  const int order = static_cast<int>(mult.size());
  if (order < 2) throw VertexGroupError("vertex groups must be nontrivial");
  if (order > kMaxTableOrder) throw VertexGroupError("table order exceeds 200");
  for (const auto& row : mult) {
    if (static_cast<int>(row.size()) != order) throw VertexGroupError("multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= order) throw VertexGroupError("table entry out of range");
  }
  int identity = -1;
  for (int e = 0; e < order && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) ok = mult[e][x] == x && mult[x][e] == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw VertexGroupError("table has no identity element");
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw VertexGroupError("table is not associative at (" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + ")");

  VertexGroup vg;
  vg.kind_ = VertexGroupKind::FiniteTable;
  vg.order_ = order;
  vg.identity_ = identity;
  vg.mult_.resize(static_cast<std::size_t>(order) * order);
  vg.inv_.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      vg.mult_[static_cast<std::size_t>(a) * order + b] = mult[a][b];
      if (mult[a][b] == identity) {
        if (mult[b][a] != identity) throw VertexGroupError("one-sided inverse in table");
        vg.inv_[a] = b;
      }
    }
    if (vg.inv_[a] < 0) throw VertexGroupError("element " + std::to_string(a) + " has no inverse");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (int g : generators) {
    if (g < 0 || g >= order) throw VertexGroupError("generator out of range");
    if (g == identity) throw VertexGroupError("generating set must not contain the identity");
    if (!std::binary_search(generators.begin(), generators.end(), vg.inv_[g]))
      throw VertexGroupError("generating set is not symmetric (missing inverse of " + std::to_string(g) + ")");
  }
  vg.generators_.assign(generators.begin(), generators.end());
  vg.compute_lengths();
  return vg;
}

void VertexGroup::compute_lengths() {
  lengths_.assign(order_, -1);
  std::deque<int> queue{static_cast<int>(identity_)};
  lengths_[identity_] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (Letter g : generators_) {
      int y = mult_[static_cast<std::size_t>(x) * order_ + g];
      if (lengths_[y] < 0) {
        lengths_[y] = lengths_[x] + 1;
        queue.push_back(y);
      }
    }
  }
  for (int x = 0; x < order_; ++x)
    if (lengths_[x] < 0) throw VertexGroupError("generators do not generate the group");
  max_length_ = *std::max_element(lengths_.begin(), lengths_.end());
}

bool VertexGroup::contains(Letter g) const {
  return kind_ == VertexGroupKind::InfiniteCyclic || (g >= 0 && g < order_);
}

void VertexGroup::check(Letter g) const {
  if (!contains(g)) throw VertexGroupError("invalid element id " + std::to_string(g));
}

Letter VertexGroup::multiply(Letter a, Letter b) const {
  if (!is_finite()) return a + b;
  check(a);
  check(b);
  return mult_[static_cast<std::size_t>(a) * order_ + b];
}

Letter VertexGroup::inverse(Letter a) const {
  if (!is_finite()) return -a;
  check(a);
  return inv_[a];
}

std::int64_t VertexGroup::length(Letter g) const {
  if (!is_finite()) return g < 0 ? -g : g;
  check(g);
  return lengths_[g];
}

VertexCentraliser VertexGroup::centraliser(Letter g) const {
  check(g);
  if (is_identity(g)) throw VertexGroupError("centraliser of the identity requested");
  VertexCentraliser c;
  if (!is_finite()) {
    c.whole_group = true;
    return c;
  }
  for (Letter h = 0; h < order_; ++h)
    if (multiply(h, g) == multiply(g, h)) c.elements.push_back(h);
  c.whole_group = static_cast<int>(c.elements.size()) == order_;
  return c;
}

std::int64_t VertexGroup::ball_count(std::int64_t radius) const {
  if (radius < 0) return 0;
  if (!is_finite()) return 2 * radius + 1;
  return std::count_if(lengths_.begin(), lengths_.end(), [radius](std::int64_t l) { return l <= radius; });
}

std::vector<std::int64_t> VertexGroup::sphere_counts(std::int64_t radius) const {
  std::vector<std::int64_t> counts(radius + 1, 0);
  if (!is_finite()) {
    for (std::int64_t n = 0; n <= radius; ++n) counts[n] = n == 0 ? 1 : 2;
    return counts;
  }
  for (auto l : lengths_)
    if (l <= radius) ++counts[l];
  return counts;
}

RationalPairAuditResult rational_pair_audit(const VertexGroup& vg, std::int64_t constant,
                                            std::int64_t exponent, std::int64_t horizon) {
  RationalPairAuditResult result;
  if (horizon < 1) throw VertexGroupError("audit horizon must be at least 1");
  auto check_counts = [&](Letter g, auto&& count_at) {
    for (std::int64_t n = 1; n <= horizon; ++n) {
      std::int64_t count = count_at(n);
      std::int64_t bound = constant * ipow(n, exponent);
      if (count > bound) {
        result = {false, g, n, count, bound};
        return false;
      }
    }
    return true;
  };
  if (!vg.is_finite()) {
    // Every nontrivial element has the whole group as centraliser; +1 stands for all of them.
    check_counts(1, [&](std::int64_t n) { return vg.ball_count(n); });
    return result;
  }
  for (Letter g = 0; g < vg.order(); ++g) {
    if (vg.is_identity(g)) continue;
    auto cent = vg.centraliser(g);
    bool ok = check_counts(g, [&](std::int64_t n) {
      return static_cast<std::int64_t>(std::count_if(cent.elements.begin(), cent.elements.end(),
                                                     [&](Letter h) { return vg.length(h) <= n; }));
    });
    if (!ok) break;
  }
  return result;
}

}  // namespace gpgrowth
