#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gpgrowth/graph_product.hpp"
#include "gpgrowth/numeric.hpp"

namespace gpgrowth {

// Malformed input; the message names the offending field or line.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SpecOptions {
  std::optional<int> radius;
  std::optional<std::size_t> memory_budget;
  std::optional<long double> tolerance;
  std::optional<int> max_order;
};

struct GroupSpec {
  GraphProduct product;
  SpecOptions options;
  std::string digest;  // SHA-256 of the file bytes, hex
};

// JSON group specification:
//   {"vertices": ["a", ...], "edges": [["a","b"], ...],
//    "groups": {"a": {"type": "Z"}, "b": {"type": "cyclic", "order": 3},
//               "c": {"type": "table", "order": m, "mult": [[...]], "generators": [...]},
//               "d": {"type": "dihedral", "n": 4}, "e": {"type": "symmetric", "degree": 3}},
//    "options": {"radius": 6, "memory_budget": 1073741824, "tolerance": 1e-9, "max_order": 12}}
GroupSpec parse_group_spec(std::string_view text);
GroupSpec load_group_spec(const std::filesystem::path& path);

std::string sha256_hex(std::string_view data);

// One integer per line; blank lines and text after '#' are ignored.
std::vector<BigInt> parse_sequence(std::istream& in);
std::vector<BigInt> load_sequence(const std::filesystem::path& path);

}  // namespace gpgrowth
