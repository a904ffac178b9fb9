#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gpgrowth/enumeration.hpp"
#include "gpgrowth/graph_product.hpp"

namespace gpgrowth {

class CentraliserError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Centraliser of the restriction of g~ to a singleton component {vertex}
// inside a finite vertex group.
struct FiniteFactor {
  VertexId vertex = 0;
  std::vector<Element> elements;  // sorted by (length, canonical order)
};

// Infinite cyclic factor generated by p_i^-1 h_i p_i. For a singleton
// component over Z the generator is the vertex generator itself.
struct CyclicFactor {
  Element generator;
  Element root;        // h_i, cyclically normal
  Element conjugator;  // p_i
  std::int64_t beta = 1;
  bool primitive = true;
};

struct CentraliserFactor {
  VertexSet component;
  std::variant<FiniteFactor, CyclicFactor> kind;

  bool is_cyclic() const { return std::holds_alternative<CyclicFactor>(kind); }
};

/// C_G(g~) = H_1 x ... x H_k x G_{link A} for A = supp(g~), where
/// g = p^-1 g~ p is cyclically reduced and g^ = p~ g~ p~^-1 cyclically normal.
struct CentraliserDescription {
  Element conjugator;  // p
  Element tilde;       // g~
  Element normalizer;  // p~
  Element normal;      // g^
  std::vector<CentraliserFactor> factors;
  VertexSet link;
};

struct PrimitiveRoot {
  Element root;
  std::int64_t beta = 1;
};

// h with h^beta = g and beta maximal, for cyclically normal g whose support
// has a connected complement graph with at least two vertices.
PrimitiveRoot primitive_root(const GraphProduct& gp, const Element& g);

CentraliserDescription centraliser_structure(const GraphProduct& gp, const Element& g);

// Elements of the factor with word length <= radius, sorted.
std::vector<Element> factor_elements(const GraphProduct& gp, const CentraliserFactor& factor, int radius);
// Number of factor elements of each length 0..radius.
std::vector<std::int64_t> factor_sphere_counts(const GraphProduct& gp, const CentraliserFactor& factor, int radius);

// |C_G(g~) ∩ B(radius)| by convolving factor and link sphere counts.
std::int64_t centraliser_ball_count(const GraphProduct& gp, const CentraliserDescription& desc, int radius,
                                    const EnumerationOptions& options = {});
std::vector<std::int64_t> centraliser_sphere_counts(const GraphProduct& gp, const CentraliserDescription& desc,
                                                    int radius, const EnumerationOptions& options = {});

// All products of factor and link elements whose lengths add up to at most
// radius, sorted.
std::vector<Element> expand_centraliser(const GraphProduct& gp, const CentraliserDescription& desc, int radius,
                                        const EnumerationOptions& options = {});

// {x in B(n) : xg = gx}, sorted.
std::vector<Element> brute_force_centraliser(const GraphProduct& gp, const BallIndex& ball, const Element& g, int n);

struct FactorAudit {
  bool pass = true;
  std::size_t factor = 0;  // first failing factor
  int radius = 0;
  std::int64_t count = 0;
  std::int64_t bound = 0;
};

// Ball counts c_0..c_N of one factor against count <= constant * n^exponent
// for 1 <= n <= N.
FactorAudit audit_factor_counts(std::span<const std::int64_t> ball_counts, std::int64_t constant,
                                std::int64_t exponent);

// Cyclic factors against 3n, finite factors against P n with P the order of
// the vertex group.
FactorAudit small_centraliser_bounds_audit(const GraphProduct& gp, const CentraliserDescription& desc, int horizon);

struct ConjugateBoundAudit {
  bool pass = true;
  std::int64_t s = 0;    // |p_g|
  std::int64_t lhs = 0;  // |C(g) ∩ B(n)|
  std::int64_t rhs = 0;  // |C(g~) ∩ B(n + 2s)|
};

ConjugateBoundAudit conjugate_bound_audit(const GraphProduct& gp, const Element& g, int n,
                                          const EnumerationOptions& options = {});

}  // namespace gpgrowth
