#include "gpgrowth/word_io.hpp"

#include <charconv>
#include <sstream>

namespace gpgrowth {

namespace {

std::int64_t parse_int(std::string_view token, std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw WordSyntaxError("bad integer in syllable '" + std::string(token) + "'");
  return value;
}

}  // namespace

std::vector<Syllable> parse_word(const GraphProduct& gp, std::string_view text) {
  std::vector<Syllable> word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    auto caret = token.find('^');
    auto colon = token.find(':');
    std::string name = token.substr(0, std::min(caret, colon));
    VertexId v = 0;
    try {
      v = gp.index_of(name);
    } catch (const GraphProductError&) {
      throw WordSyntaxError("unknown vertex in syllable '" + token + "'");
    }
    const VertexGroup& vg = gp.group(v);
    Letter letter = 0;
    if (caret != std::string::npos && colon != std::string::npos) {
      throw WordSyntaxError("syllable '" + token + "' mixes '^' and ':'");
    } else if (caret != std::string::npos) {
      std::int64_t e = parse_int(token, std::string_view(token).substr(caret + 1));
      if (!vg.is_finite()) {
        letter = e;
      } else if (vg.has_power_ids()) {
        letter = ((e % vg.order()) + vg.order()) % vg.order();
      } else {
        throw WordSyntaxError("'^' syllables need a Z or cyclic vertex: '" + token + "'");
      }
    } else if (colon != std::string::npos) {
      if (!vg.is_finite()) throw WordSyntaxError("':' syllables need a finite vertex: '" + token + "'");
      letter = parse_int(token, std::string_view(token).substr(colon + 1));
      if (!vg.contains(letter)) throw WordSyntaxError("element id out of range in '" + token + "'");
    } else {
      letter = vg.is_finite() ? vg.generators().front() : 1;
    }
    word.push_back({v, letter});
  }
  return word;
}

std::string format_element(const GraphProduct& gp, const Element& e) {
  if (e.is_identity()) return "1";
  std::string out;
  for (const auto& s : e.syllables()) {
    if (!out.empty()) out += ' ';
    out += gp.name(s.vertex);
    out += gp.group(s.vertex).is_finite() ? ':' : '^';
    out += std::to_string(s.letter);
  }
  return out;
}

std::string format_vertex_set(const GraphProduct& gp, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s.members()) {
    if (!first) out += ',';
    out += gp.name(v);
    first = false;
  }
  return out + "}";
}

VertexSet parse_vertex_set(const GraphProduct& gp, const std::vector<std::string>& names) {
  VertexSet s;
  for (const auto& n : names) s.insert(gp.index_of(n));
  return s;
}

}  // namespace gpgrowth
