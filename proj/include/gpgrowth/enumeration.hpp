#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gpgrowth/graph_product.hpp"
#include "gpgrowth/numeric.hpp"

namespace gpgrowth {

struct EnumerationOptions {
  std::size_t memory_budget = std::size_t{2} << 30;  // bytes
  unsigned threads = 1;
};

/// Balls B(n) of the Cayley graph, stored layer by layer: layer d holds the
/// canonical elements of word length exactly d.
class BallIndex {
 public:
  int radius() const { return static_cast<int>(layers_.size()) - 1; }
  const std::vector<Element>& layer(int d) const { return layers_.at(d); }
  const std::vector<std::vector<Element>>& layers() const { return layers_; }
  std::optional<int> distance(const Element& e) const;
  bool contains(const Element& e) const { return distance_.count(e) != 0; }

  std::vector<std::int64_t> sphere_sizes() const;
  std::vector<std::int64_t> ball_sizes() const;
  std::int64_t ball_size(int n) const;
  // Elements of B(n) in layer order.
  std::vector<Element> elements(int n) const;

  std::size_t approximate_bytes() const { return bytes_; }

  // "d word" lines sorted by distance then word text.
  std::string dump(const GraphProduct& gp) const;

 private:
  friend BallIndex enumerate_ball(const GraphProduct&, int, const EnumerationOptions&);
  std::vector<std::vector<Element>> layers_;
  std::unordered_map<Element, int, ElementHash> distance_;
  std::size_t bytes_ = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int completed_radius, BallIndex partial)
      : std::runtime_error("memory budget exceeded after radius " + std::to_string(completed_radius)),
        completed_radius_(completed_radius),
        partial_(std::move(partial)) {}
  int completed_radius() const { return completed_radius_; }
  const BallIndex& partial() const { return partial_; }

 private:
  int completed_radius_;
  BallIndex partial_;
};

// Throws BudgetExceeded (carrying the completed layers) when the estimated
// memory use passes options.memory_budget.
BallIndex enumerate_ball(const GraphProduct& gp, int radius, const EnumerationOptions& options = {});

std::vector<std::int64_t> sphere_sizes(const GraphProduct& gp, int radius, const EnumerationOptions& options = {});
std::vector<std::int64_t> ball_sizes(const GraphProduct& gp, int radius, const EnumerationOptions& options = {});

// d_n = |{(x, y) in B(n)^2 : xy = yx}| / |B(n)|^2 for n = 0..ball.radius().
std::vector<Rational> dc_sequence(const GraphProduct& gp, const BallIndex& ball, unsigned threads = 1);
// Reference count over all ordered pairs; used to validate dc_sequence.
std::vector<Rational> dc_sequence_naive(const GraphProduct& gp, const BallIndex& ball);

// |{g in B(n) : supp(g~) = a, |p_g| <= s}|.
std::int64_t count_tilde_support(const GraphProduct& gp, const BallIndex& ball, int n, VertexSet a, std::int64_t s);

struct SubmultiplicativityResult {
  bool pass = true;
  std::size_t i = 0;
  std::size_t j = 0;
};

// Checks a_{i+j} <= a_i a_j for i <= j, reporting the lexicographically
// first violation.
SubmultiplicativityResult submultiplicativity_audit(std::span<const BigInt> seq);

std::vector<BigInt> to_big(std::span<const std::int64_t> seq);

}  // namespace gpgrowth
