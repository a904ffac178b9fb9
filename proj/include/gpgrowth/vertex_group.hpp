#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpgrowth {

// Letters of a vertex group. For finite groups this is an element id in
// [0, order); for the infinite cyclic group it is the exponent.
using Letter = std::int64_t;

class VertexGroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class VertexGroupKind { FiniteTable, InfiniteCyclic };

// Centraliser of a nontrivial element inside a single vertex group.
struct VertexCentraliser {
  bool whole_group = false;       // always true for the infinite cyclic group
  std::vector<Letter> elements;   // sorted; empty when whole_group is set for Z
};

struct RationalPairAuditResult {
  bool pass = true;
  // First violation (in order of element id, then radius).
  Letter witness = 0;
  std::int64_t radius = 0;
  std::int64_t count = 0;
  std::int64_t bound = 0;
};

/// A vertex group H(v) together with its symmetric generating set X(v).
///
/// Finite groups are given by a multiplication table; word lengths are
/// computed once by breadth-first search in the Cayley graph. The only
/// infinite vertex group is Z with generators {+1, -1}.
class VertexGroup {
 public:
  static VertexGroup infinite_cyclic();
  // C_q generated by {x, x^-1}; element id k is x^k.
  static VertexGroup cyclic(int order);
  // D_n of order 2n. Ids r^k -> k, s r^k -> n + k; generators {r, r^-1, s}.
  static VertexGroup dihedral(int n);
  // S_3 generated by the transpositions (0 1), (1 2); S_4 by the Coxeter
  // transpositions (0 1), (1 2), (2 3).
  static VertexGroup symmetric(int degree);
  // Closure of a set of permutations; the generating set is the given
  // permutations together with their inverses.
  static VertexGroup from_permutations(const std::vector<std::vector<int>>& generators);
  // Validates group axioms, symmetry of generators and generation.
  static VertexGroup from_table(std::vector<std::vector<int>> mult, std::vector<int> generators);

  VertexGroupKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == VertexGroupKind::FiniteTable; }
  // 0 for the infinite cyclic group.
  int order() const { return order_; }
  Letter identity() const { return identity_; }
  bool is_identity(Letter g) const { return g == identity_; }
  bool contains(Letter g) const;
  void check(Letter g) const;

  Letter multiply(Letter a, Letter b) const;
  Letter inverse(Letter a) const;
  // Sorted, symmetric, identity-free.
  const std::vector<Letter>& generators() const { return generators_; }

  std::int64_t length(Letter g) const;
  VertexCentraliser centraliser(Letter g) const;
  std::int64_t ball_count(std::int64_t radius) const;
  // Number of elements of each length 0..radius (sphere sizes).
  std::vector<std::int64_t> sphere_counts(std::int64_t radius) const;

  // Default small-centraliser constants: P = order, beta = 1 for finite
  // groups; P = 3, beta = 1 for Z.
  std::int64_t default_centraliser_constant() const { return is_finite() ? order_ : 3; }

  const std::vector<int>& table() const { return mult_; }
  // True for groups built by cyclic(): element id k is x^k.
  bool has_power_ids() const { return power_ids_; }

 private:
  VertexGroup() = default;
  void compute_lengths();

  VertexGroupKind kind_ = VertexGroupKind::InfiniteCyclic;
  int order_ = 0;
  Letter identity_ = 0;
  std::vector<int> mult_;  // row-major order x order
  std::vector<int> inv_;
  std::vector<Letter> generators_;
  std::vector<std::int64_t> lengths_;
  std::int64_t max_length_ = 0;
  bool power_ids_ = false;
};

RationalPairAuditResult rational_pair_audit(const VertexGroup& vg, std::int64_t constant,
                                            std::int64_t exponent, std::int64_t horizon);

}  // namespace gpgrowth
