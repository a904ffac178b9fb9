#pragma once

#include <string>
#include <vector>

#include "gpgrowth/graph_product.hpp"
#include "gpgrowth/group_spec.hpp"
#include "gpgrowth/word_io.hpp"

namespace fixtures {

inline gpgrowth::GroupSpec load(const std::string& name) {
  return gpgrowth::load_group_spec(std::string(GPGROWTH_DATA_DIR) + "/groups/" + name + ".json");
}

inline gpgrowth::Element word(const gpgrowth::GraphProduct& gp, const std::string& text) {
  return gp.normalize(gpgrowth::parse_word(gp, text));
}

inline const std::vector<std::string>& infinite_fixtures() {
  static const std::vector<std::string> names{"f2", "z2", "p3", "infinite_dihedral", "pentagon_racg", "mixed", "k22"};
  return names;
}

// Free group on n letters as a graph product.
inline gpgrowth::GraphProduct free_group(int n) {
  std::vector<std::string> names;
  std::vector<gpgrowth::VertexGroup> groups;
  for (int i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
    groups.push_back(gpgrowth::VertexGroup::infinite_cyclic());
  }
  return gpgrowth::GraphProduct(names, {}, groups);
}

}  // namespace fixtures
