#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpgrowth/vertex_group.hpp"

namespace gpgrowth {

using VertexId = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 64;

class GraphProductError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A set of vertices of a presentation graph (at most 64 vertices).
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  static VertexSet single(VertexId v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet first_n(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  bool contains(VertexId v) const { return (bits_ >> v) & 1u; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  std::uint64_t bits() const { return bits_; }

  void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
  void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend bool operator==(VertexSet, VertexSet) = default;

  // Members in increasing order.
  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<VertexId>(std::countr_zero(b)));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

struct Syllable {
  VertexId vertex = 0;
  Letter letter = 0;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

class GraphProduct;

/// A group element in canonical normal form: a Green-reduced syllable
/// sequence that is the lexicographically least shuffle representative under
/// the vertex order. Equal elements have equal syllable sequences.
class Element {
 public:
  Element() = default;

  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t syllable_length() const { return syllables_.size(); }
  std::int64_t word_length() const { return word_length_; }
  VertexSet support() const { return support_; }
  bool is_identity() const { return syllables_.empty(); }
  std::uint64_t group_id() const { return group_id_; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.group_id_ == b.group_id_ && a.syllables_ == b.syllables_;
  }
  // Shortlex on syllable sequences; only meaningful within one group.
  friend bool operator<(const Element& a, const Element& b) {
    if (a.syllables_.size() != b.syllables_.size()) return a.syllables_.size() < b.syllables_.size();
    return a.syllables_ < b.syllables_;
  }

  std::size_t hash() const;

 private:
  friend class GraphProduct;
  std::vector<Syllable> syllables_;
  std::int64_t word_length_ = 0;
  VertexSet support_;
  std::uint64_t group_id_ = 0;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

// g = conjugator^-1 * reduced * conjugator with |g| = 2|conjugator| + |reduced|.
struct CyclicReduction {
  Element conjugator;
  Element reduced;
};

// normal = conjugator * input * conjugator^-1.
struct CyclicNormalization {
  Element conjugator;
  Element normal;
};

/// The graph product G(Gamma, H) of vertex groups over a finite simple graph,
/// with generating set the disjoint union of the vertex generating sets.
///
/// Immutable after construction; every operation is a pure function.
class GraphProduct {
 public:
  GraphProduct(std::vector<std::string> vertex_names,
               const std::vector<std::pair<VertexId, VertexId>>& edges,
               std::vector<VertexGroup> groups);

  std::size_t vertex_count() const { return names_.size(); }
  VertexSet all_vertices() const { return VertexSet::first_n(names_.size()); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  VertexId index_of(const std::string& name) const;
  const VertexGroup& group(VertexId v) const { return groups_.at(v); }
  bool adjacent(VertexId u, VertexId v) const { return neighbours_[u].contains(v); }
  VertexSet neighbours(VertexId v) const { return neighbours_.at(v); }
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  std::uint64_t id() const { return id_; }

  // The generating set X as single-syllable words, ordered by vertex then letter.
  const std::vector<Syllable>& generators() const { return generators_; }

  Element identity() const;
  Element normalize(std::span<const Syllable> word) const;
  Element syllable(VertexId v, Letter letter) const;
  Element multiply(const Element& a, const Element& b) const;
  Element multiply(const Element& a, const Syllable& s) const;
  Element inverse(const Element& a) const;
  Element power(const Element& a, std::int64_t exponent) const;
  Element conjugate(const Element& c, const Element& g) const;  // c g c^-1
  bool commutes(const Element& a, const Element& b) const;

  VertexSet link(VertexSet a) const;
  // Connected components of the complement of the induced subgraph on a,
  // ordered by their smallest vertex.
  std::vector<VertexSet> complement_components(VertexSet a) const;
  // Syllables of g on vertices in a (the projection onto G_a when a is a
  // union of complement components of supp(g)).
  Element restrict(const Element& g, VertexSet a) const;

  // Indices of syllables that can be shuffled to the front / back.
  std::vector<std::size_t> front_syllables(const Element& g) const;
  std::vector<std::size_t> back_syllables(const Element& g) const;

  CyclicReduction cyclically_reduce(const Element& g) const;
  bool is_cyclically_reduced(const Element& g) const;
  CyclicNormalization cyclically_normalize(const Element& g) const;
  bool is_cyclically_normal(const Element& g) const;

  // Induced graph product on a. Vertex order and names are inherited, so
  // canonical forms map to canonical forms under embed().
  GraphProduct special_subgroup(VertexSet a) const;
  // Vertices of this group, listed in the order of the special subgroup's
  // vertex ids (valid for a group built by special_subgroup(a) of *this).
  Element embed(const GraphProduct& subgroup, VertexSet a, const Element& h) const;

 private:
  void check_element(const Element& e) const;
  void pile_up(std::vector<Syllable>& reduced, Syllable s) const;
  Element finish(std::vector<Syllable> reduced) const;
  // One greedy generator step; returns false when no step shortens g.
  bool reduction_step(const Element& g, Element& shorter, Syllable& used) const;

  std::vector<std::string> names_;
  std::vector<VertexGroup> groups_;
  std::vector<VertexSet> neighbours_;
  std::vector<Syllable> generators_;
  std::uint64_t id_ = 0;
};

}  // namespace gpgrowth
