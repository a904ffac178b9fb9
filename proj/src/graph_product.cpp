#include "gpgrowth/graph_product.hpp"

#include <algorithm>
#include <atomic>
#include <set>

namespace gpgrowth {

namespace {

std::atomic<std::uint64_t> next_group_id{1};

}  // namespace

std::size_t Element::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull ^ group_id_;
  for (const auto& s : syllables_) {
    h ^= s.vertex + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(s.letter) * 0xff51afd7ed558ccdull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

GraphProduct::GraphProduct(std::vector<std::string> vertex_names,
                           const std::vector<std::pair<VertexId, VertexId>>& edges,
                           std::vector<VertexGroup> groups)
    : names_(std::move(vertex_names)), groups_(std::move(groups)), id_(next_group_id++) {
  if (names_.size() > kMaxVertices) throw GraphProductError("at most 64 vertices are supported");
  if (groups_.size() != names_.size()) throw GraphProductError("every vertex needs exactly one group");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw GraphProductError("empty vertex name");
    if (!seen.insert(n).second) throw GraphProductError("duplicate vertex name '" + n + "'");
  }
  neighbours_.assign(names_.size(), VertexSet{});
  for (auto [u, v] : edges) {
    if (u >= names_.size() || v >= names_.size()) throw GraphProductError("edge references unknown vertex");
    if (u == v) throw GraphProductError("self-loop at vertex '" + names_[u] + "'");
    if (neighbours_[u].contains(v))
      throw GraphProductError("duplicate edge " + names_[u] + "-" + names_[v]);
    neighbours_[u].insert(v);
    neighbours_[v].insert(u);
  }
  for (VertexId v = 0; v < names_.size(); ++v)
    for (Letter x : groups_[v].generators()) generators_.push_back({v, x});
}

VertexId GraphProduct::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw GraphProductError("unknown vertex '" + name + "'");
  return static_cast<VertexId>(it - names_.begin());
}

std::vector<std::pair<VertexId, VertexId>> GraphProduct::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < names_.size(); ++u)
    for (VertexId v : neighbours_[u].members())
      if (u < v) out.emplace_back(u, v);
  return out;
}

void GraphProduct::check_element(const Element& e) const {
  if (e.group_id_ != id_) throw GraphProductError("element belongs to a different graph product");
}

Element GraphProduct::identity() const {
  Element e;
  e.group_id_ = id_;
  return e;
}

// Appends s to a Green-reduced sequence: s moves left past syllables on
// adjacent vertices and merges with the first same-vertex syllable it meets.
void GraphProduct::pile_up(std::vector<Syllable>& reduced, Syllable s) const {
  if (s.vertex >= names_.size()) throw GraphProductError("unknown vertex id " + std::to_string(s.vertex));
  const VertexGroup& vg = groups_[s.vertex];
  vg.check(s.letter);
  if (vg.is_identity(s.letter)) return;
  for (std::size_t j = reduced.size(); j-- > 0;) {
    if (reduced[j].vertex == s.vertex) {
      Letter merged = vg.multiply(reduced[j].letter, s.letter);
      if (vg.is_identity(merged))
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(j));
      else
        reduced[j].letter = merged;
      return;
    }
    if (!adjacent(reduced[j].vertex, s.vertex)) break;
  }
  reduced.push_back(s);
}

// Sorts a reduced sequence into its lexicographically least linear extension
// of the dependence order and fills the cached invariants.
Element GraphProduct::finish(std::vector<Syllable> reduced) const {
  const std::size_t m = reduced.size();
  Element e;
  e.group_id_ = id_;
  if (m > 1) {
    std::vector<std::size_t> blockers(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!adjacent(reduced[j].vertex, reduced[i].vertex)) ++blockers[i];
    std::vector<bool> done(m, false);
    e.syllables_.reserve(m);
    for (std::size_t step = 0; step < m; ++step) {
      std::size_t pick = m;
      for (std::size_t i = 0; i < m; ++i)
        if (!done[i] && blockers[i] == 0 && (pick == m || reduced[i].vertex < reduced[pick].vertex)) pick = i;
      done[pick] = true;
      e.syllables_.push_back(reduced[pick]);
      for (std::size_t i = pick + 1; i < m; ++i)
        if (!done[i] && !adjacent(reduced[pick].vertex, reduced[i].vertex)) --blockers[i];
    }
  } else {
    e.syllables_ = std::move(reduced);
  }
  for (const auto& s : e.syllables_) {
    e.word_length_ += groups_[s.vertex].length(s.letter);
    e.support_.insert(s.vertex);
  }
  return e;
}

Element GraphProduct::normalize(std::span<const Syllable> word) const {
  std::vector<Syllable> reduced;
  reduced.reserve(word.size());
  for (const auto& s : word) pile_up(reduced, s);
  return finish(std::move(reduced));
}

Element GraphProduct::syllable(VertexId v, Letter letter) const {
  Syllable s{v, letter};
  return normalize(std::span<const Syllable>(&s, 1));
}

Element GraphProduct::multiply(const Element& a, const Element& b) const {
  check_element(a);
  check_element(b);
  std::vector<Syllable> reduced = a.syllables_;
  for (const auto& s : b.syllables_) pile_up(reduced, s);
  return finish(std::move(reduced));
}

Element GraphProduct::multiply(const Element& a, const Syllable& s) const {
  check_element(a);
  std::vector<Syllable> reduced;
  reduced.reserve(a.syllables_.size() + 1);
  reduced = a.syllables_;
  pile_up(reduced, s);
  return finish(std::move(reduced));
}

Element GraphProduct::inverse(const Element& a) const {
  check_element(a);
  std::vector<Syllable> reversed;
  reversed.reserve(a.syllables_.size());
  for (auto it = a.syllables_.rbegin(); it != a.syllables_.rend(); ++it)
    reversed.push_back({it->vertex, groups_[it->vertex].inverse(it->letter)});
  return finish(std::move(reversed));
}

Element GraphProduct::power(const Element& a, std::int64_t exponent) const {
  Element base = exponent < 0 ? inverse(a) : a;
  std::uint64_t k = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  Element result = identity();
  while (k) {
    if (k & 1u) result = multiply(result, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return result;
}

Element GraphProduct::conjugate(const Element& c, const Element& g) const {
  return multiply(multiply(c, g), inverse(c));
}

bool GraphProduct::commutes(const Element& a, const Element& b) const {
  check_element(a);
  check_element(b);
  if (a.is_identity() || b.is_identity()) return true;
  if (b.support().subset_of(link(a.support()))) return true;
  return multiply(a, b) == multiply(b, a);
}

VertexSet GraphProduct::link(VertexSet a) const {
  if (!a.subset_of(all_vertices())) throw GraphProductError("vertex set contains unknown vertices");
  VertexSet result = all_vertices();
  for (VertexId v : a.members()) result = result & neighbours_[v];
  return result;
}

std::vector<VertexSet> GraphProduct::complement_components(VertexSet a) const {
  if (a.empty()) throw GraphProductError("complement components of the empty set");
  if (!a.subset_of(all_vertices())) throw GraphProductError("vertex set contains unknown vertices");
  std::vector<VertexSet> components;
  VertexSet remaining = a;
  while (!remaining.empty()) {
    VertexId start = remaining.members().front();
    VertexSet component = VertexSet::single(start);
    std::vector<VertexId> stack{start};
    remaining.erase(start);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      VertexSet next = remaining - neighbours_[u];
      for (VertexId w : next.members()) {
        component.insert(w);
        remaining.erase(w);
        stack.push_back(w);
      }
    }
    components.push_back(component);
  }
  return components;
}

Element GraphProduct::restrict(const Element& g, VertexSet a) const {
  check_element(g);
  std::vector<Syllable> kept;
  for (const auto& s : g.syllables_)
    if (a.contains(s.vertex)) kept.push_back(s);
  return normalize(kept);
}

std::vector<std::size_t> GraphProduct::front_syllables(const Element& g) const {
  std::vector<std::size_t> out;
  const auto& s = g.syllables_;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool free = true;
    for (std::size_t j = 0; j < i && free; ++j) free = adjacent(s[j].vertex, s[i].vertex);
    if (free) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> GraphProduct::back_syllables(const Element& g) const {
  std::vector<std::size_t> out;
  const auto& s = g.syllables_;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool free = true;
    for (std::size_t j = i + 1; j < s.size() && free; ++j) free = adjacent(s[j].vertex, s[i].vertex);
    if (free) out.push_back(i);
  }
  return out;
}

bool GraphProduct::reduction_step(const Element& g, Element& shorter, Syllable& used) const {
  if (g.syllable_length() == 0) return false;
  std::vector<VertexId> vertices;
  for (std::size_t i : front_syllables(g)) vertices.push_back(g.syllables_[i].vertex);
  std::sort(vertices.begin(), vertices.end());
  for (VertexId v : vertices) {
    for (Letter x : groups_[v].generators()) {
      Element h = conjugate(syllable(v, x), g);
      if (h.word_length() == g.word_length() - 2) {
        shorter = std::move(h);
        used = {v, x};
        return true;
      }
    }
  }
  return false;
}

bool GraphProduct::is_cyclically_reduced(const Element& g) const {
  check_element(g);
  Element shorter;
  Syllable used;
  return !reduction_step(g, shorter, used);
}

CyclicReduction GraphProduct::cyclically_reduce(const Element& g) const {
  check_element(g);
  CyclicReduction r{identity(), g};
  Element shorter;
  Syllable used;
  std::int64_t steps = 0;
  while (reduction_step(r.reduced, shorter, used)) {
    r.reduced = std::move(shorter);
    r.conjugator = multiply(syllable(used.vertex, used.letter), r.conjugator);
    ++steps;
  }
  if (r.conjugator.word_length() != steps)
    throw std::logic_error("cyclic reduction produced a non-geodesic conjugator");
  return r;
}

bool GraphProduct::is_cyclically_normal(const Element& g) const {
  check_element(g);
  if (g.syllable_length() <= 1) return true;
  auto front = front_syllables(g);
  auto back = back_syllables(g);
  for (std::size_t i : front)
    for (std::size_t j : back)
      if (i != j && g.syllables_[i].vertex == g.syllables_[j].vertex) return false;
  return true;
}

CyclicNormalization GraphProduct::cyclically_normalize(const Element& g) const {
  check_element(g);
  if (!is_cyclically_reduced(g)) throw GraphProductError("cyclically_normalize needs a cyclically reduced element");
  if (is_cyclically_normal(g)) return {identity(), g};
  // The last letters over all normal forms pairwise commute, so they sit on
  // distinct vertices.
  std::vector<Syllable> last;
  VertexSet used;
  for (std::size_t i : back_syllables(g)) {
    const Syllable& s = g.syllables_[i];
    if (used.contains(s.vertex)) throw std::logic_error("two final letters on one vertex");
    used.insert(s.vertex);
    last.push_back(s);
  }
  CyclicNormalization out{normalize(last), identity()};
  out.normal = conjugate(out.conjugator, g);
  if (!is_cyclically_normal(out.normal) || out.normal.support() != g.support())
    throw std::logic_error("cyclic normalization failed for a cyclically reduced element");
  return out;
}

GraphProduct GraphProduct::special_subgroup(VertexSet a) const {
  if (!a.subset_of(all_vertices())) throw GraphProductError("vertex set contains unknown vertices");
  auto members = a.members();
  std::vector<std::string> names;
  std::vector<VertexGroup> groups;
  for (VertexId v : members) {
    names.push_back(names_[v]);
    groups.push_back(groups_[v]);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < members.size(); ++i)
    for (VertexId j = i + 1; j < members.size(); ++j)
      if (adjacent(members[i], members[j])) edges.emplace_back(i, j);
  return GraphProduct(std::move(names), edges, std::move(groups));
}

Element GraphProduct::embed(const GraphProduct& subgroup, VertexSet a, const Element& h) const {
  subgroup.check_element(h);
  auto members = a.members();
  if (members.size() != subgroup.vertex_count()) throw GraphProductError("embedding set does not match subgroup");
  Element e;
  e.group_id_ = id_;
  e.word_length_ = h.word_length_;
  for (const auto& s : h.syllables_) {
    VertexId v = members.at(s.vertex);
    e.syllables_.push_back({v, s.letter});
    e.support_.insert(v);
  }
  return e;
}

}  // namespace gpgrowth
