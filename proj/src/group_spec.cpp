#include "gpgrowth/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

namespace gpgrowth {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw SpecError(path + ": " + what); }

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

long long require_int(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<long long>();
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

VertexGroup parse_vertex_group(const json& desc, const std::string& path) {
  if (!desc.is_object()) fail(path, "expected an object");
  const json& type = require(desc, "type", path);
  if (!type.is_string()) fail(path + ".type", "expected a string");
  const std::string t = type.get<std::string>();
  try {
    if (t == "Z") return VertexGroup::infinite_cyclic();
    if (t == "cyclic") return VertexGroup::cyclic(static_cast<int>(require_int(desc, "order", path)));
    if (t == "dihedral") return VertexGroup::dihedral(static_cast<int>(require_int(desc, "n", path)));
    if (t == "symmetric") return VertexGroup::symmetric(static_cast<int>(require_int(desc, "degree", path)));
    if (t == "table") {
      long long order = require_int(desc, "order", path);
      const json& mult = require(desc, "mult", path);
      const json& gens = require(desc, "generators", path);
      if (!mult.is_array() || static_cast<long long>(mult.size()) != order)
        fail(path + ".mult", "expected " + std::to_string(order) + " rows");
      std::vector<std::vector<int>> table;
      for (std::size_t i = 0; i < mult.size(); ++i) {
        const json& row = mult[i];
        if (!row.is_array() || static_cast<long long>(row.size()) != order)
          fail(path + ".mult[" + std::to_string(i) + "]", "expected " + std::to_string(order) + " entries");
        std::vector<int> r;
        for (const json& x : row) {
          if (!x.is_number_integer()) fail(path + ".mult[" + std::to_string(i) + "]", "expected integers");
          r.push_back(x.get<int>());
        }
        table.push_back(std::move(r));
      }
      if (!gens.is_array()) fail(path + ".generators", "expected an array");
      std::vector<int> g;
      for (const json& x : gens) {
        if (!x.is_number_integer()) fail(path + ".generators", "expected integers");
        g.push_back(x.get<int>());
      }
      return VertexGroup::from_table(std::move(table), std::move(g));
    }
  } catch (const VertexGroupError& e) {
    fail(path, e.what());
  }
  fail(path + ".type", "unknown vertex group type '" + t + "'");
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

GroupSpec parse_group_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": invalid JSON (" +
                    e.what() + ")");
  }
  if (!doc.is_object()) fail("$", "expected an object");

  const json& vertices = require(doc, "vertices", "$");
  if (!vertices.is_array() || vertices.empty()) fail("$.vertices", "expected a nonempty array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string path = "$.vertices[" + std::to_string(i) + "]";
    if (!vertices[i].is_string()) fail(path, "expected a string");
    std::string n = vertices[i].get<std::string>();
    if (!valid_name(n)) fail(path, "vertex name '" + n + "' is not an identifier");
    if (std::find(names.begin(), names.end(), n) != names.end()) fail(path, "duplicate vertex '" + n + "'");
    names.push_back(std::move(n));
  }
  if (names.size() > kMaxVertices) fail("$.vertices", "at most 64 vertices are supported");
  auto index = [&](const json& v, const std::string& path) -> VertexId {
    if (!v.is_string()) fail(path, "expected a vertex name");
    auto it = std::find(names.begin(), names.end(), v.get<std::string>());
    if (it == names.end()) fail(path, "undeclared vertex '" + v.get<std::string>() + "'");
    return static_cast<VertexId>(it - names.begin());
  };

  std::vector<std::pair<VertexId, VertexId>> edges;
  if (doc.contains("edges")) {
    const json& e = doc["edges"];
    if (!e.is_array()) fail("$.edges", "expected an array");
    for (std::size_t i = 0; i < e.size(); ++i) {
      const std::string path = "$.edges[" + std::to_string(i) + "]";
      if (!e[i].is_array() || e[i].size() != 2) fail(path, "expected a pair of vertex names");
      VertexId u = index(e[i][0], path + "[0]"), v = index(e[i][1], path + "[1]");
      if (u == v) fail(path, "self-loop at '" + names[u] + "'");
      auto key = std::minmax(u, v);
      for (auto [a, b] : edges)
        if (std::minmax(a, b) == key) fail(path, "duplicate edge " + names[u] + "-" + names[v]);
      edges.emplace_back(u, v);
    }
  }

  const json& groups = require(doc, "groups", "$");
  if (!groups.is_object()) fail("$.groups", "expected an object keyed by vertex");
  for (auto it = groups.begin(); it != groups.end(); ++it)
    if (std::find(names.begin(), names.end(), it.key()) == names.end())
      fail("$.groups." + it.key(), "undeclared vertex");
  std::vector<VertexGroup> vgs;
  for (const auto& n : names) {
    auto it = groups.find(n);
    if (it == groups.end()) fail("$.groups", "no group given for vertex '" + n + "'");
    vgs.push_back(parse_vertex_group(*it, "$.groups." + n));
  }

  SpecOptions options;
  if (doc.contains("options")) {
    const json& o = doc["options"];
    if (!o.is_object()) fail("$.options", "expected an object");
    for (auto it = o.begin(); it != o.end(); ++it) {
      const std::string path = "$.options." + it.key();
      const json& v = it.value();
      if (it.key() == "radius" || it.key() == "max_order") {
        if (!v.is_number_integer() || v.get<long long>() < 0) fail(path, "expected a nonnegative integer");
        (it.key() == "radius" ? options.radius : options.max_order) = v.get<int>();
      } else if (it.key() == "memory_budget") {
        if (!v.is_number_integer() || v.get<long long>() <= 0) fail(path, "expected a positive integer");
        options.memory_budget = v.get<std::size_t>();
      } else if (it.key() == "tolerance") {
        if (!v.is_number() || v.get<double>() <= 0) fail(path, "expected a positive number");
        options.tolerance = v.get<long double>();
      } else {
        fail(path, "unknown option");
      }
    }
  }

  try {
    return GroupSpec{GraphProduct(std::move(names), edges, std::move(vgs)), options, sha256_hex(text)};
  } catch (const GraphProductError& e) {
    throw SpecError(std::string("$: ") + e.what());
  }
}

GroupSpec load_group_spec(const std::filesystem::path& path) {
  std::string text = read_file(path);
  try {
    return parse_group_spec(text);
  } catch (const SpecError& e) {
    throw SpecError(path.string() + ": " + e.what());
  }
}

std::vector<BigInt> parse_sequence(std::istream& in) {
  std::vector<BigInt> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(b, e - b + 1);
    std::size_t digits = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
    if (digits == tok.size() || !std::all_of(tok.begin() + static_cast<std::ptrdiff_t>(digits), tok.end(),
                                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw SpecError("line " + std::to_string(lineno) + ": expected an integer, got '" + tok + "'");
    out.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
  }
  return out;
}

std::vector<BigInt> load_sequence(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path.string() + ": cannot open file");
  try {
    return parse_sequence(in);
  } catch (const SpecError& e) {
    throw SpecError(path.string() + ": " + e.what());
  }
}

}  // namespace gpgrowth
