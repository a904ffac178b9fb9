#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gpgrowth/graph_product.hpp"

namespace gpgrowth {

class WordSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Whitespace-separated syllables: `v^e` (Z or cyclic vertices), `v:id`
// (finite vertices), a bare `v` (first generator of H(v)), or `1`.
std::vector<Syllable> parse_word(const GraphProduct& gp, std::string_view text);

// Canonical form: `v^e` for Z vertices, `v:id` for finite vertices, `1` for
// the identity.
std::string format_element(const GraphProduct& gp, const Element& e);

// "{a,b}" in vertex order.
std::string format_vertex_set(const GraphProduct& gp, VertexSet s);

VertexSet parse_vertex_set(const GraphProduct& gp, const std::vector<std::string>& names);

}  // namespace gpgrowth
