#include "gpgrowth/enumeration.hpp"

#include <algorithm>
#include <unordered_set>

#include "gpgrowth/parallel.hpp"
#include "gpgrowth/word_io.hpp"

namespace gpgrowth {

namespace {

std::size_t element_bytes(const Element& e) {
  // layer copy + map key copy + hash node overhead
  return 2 * (sizeof(Element) + e.syllable_length() * sizeof(Syllable)) + 48;
}

}  // namespace

std::optional<int> BallIndex::distance(const Element& e) const {
  auto it = distance_.find(e);
  if (it == distance_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::int64_t> BallIndex::sphere_sizes() const {
  std::vector<std::int64_t> out;
  for (const auto& layer : layers_) out.push_back(static_cast<std::int64_t>(layer.size()));
  return out;
}

std::vector<std::int64_t> BallIndex::ball_sizes() const {
  std::vector<std::int64_t> out;
  std::int64_t total = 0;
  for (const auto& layer : layers_) out.push_back(total += static_cast<std::int64_t>(layer.size()));
  return out;
}

std::int64_t BallIndex::ball_size(int n) const {
  std::int64_t total = 0;
  for (int d = 0; d <= n && d <= radius(); ++d) total += static_cast<std::int64_t>(layers_[d].size());
  return total;
}

std::vector<Element> BallIndex::elements(int n) const {
  std::vector<Element> out;
  for (int d = 0; d <= n && d <= radius(); ++d) out.insert(out.end(), layers_[d].begin(), layers_[d].end());
  return out;
}

std::string BallIndex::dump(const GraphProduct& gp) const {
  std::vector<std::pair<int, std::string>> lines;
  for (int d = 0; d <= radius(); ++d)
    for (const auto& e : layers_[d]) lines.emplace_back(d, format_element(gp, e));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& [d, word] : lines) out += std::to_string(d) + " " + word + "\n";
  return out;
}

BallIndex enumerate_ball(const GraphProduct& gp, int radius, const EnumerationOptions& options) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  BallIndex ball;
  Element one = gp.identity();
  ball.layers_.push_back({one});
  ball.distance_.emplace(one, 0);
  ball.bytes_ = element_bytes(one);
  const auto& gens = gp.generators();

  for (int d = 0; d < radius; ++d) {
    const auto& frontier = ball.layers_[d];
    const unsigned chunks = chunk_count(frontier.size(), options.threads);
    std::vector<std::vector<Element>> found(chunks);
    parallel_chunks(frontier.size(), options.threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
      std::unordered_set<Element, ElementHash> local;
      for (std::size_t i = begin; i < end; ++i) {
        for (const auto& x : gens) {
          Element next = gp.multiply(frontier[i], x);
          if (ball.distance_.count(next) || !local.insert(next).second) continue;
          found[chunk].push_back(std::move(next));
        }
      }
    });
    std::vector<Element> layer;
    const std::size_t bytes_before = ball.bytes_;
    for (auto& part : found) {
      for (auto& e : part) {
        if (ball.distance_.count(e)) continue;
        ball.bytes_ += element_bytes(e);
        if (ball.bytes_ > options.memory_budget) {
          // drop the incomplete layer; every map entry at distance d+1 goes too
          for (const auto& added : layer) ball.distance_.erase(added);
          ball.bytes_ = bytes_before;
          throw BudgetExceeded(d, std::move(ball));
        }
        ball.distance_.emplace(e, d + 1);
        layer.push_back(std::move(e));
      }
    }
    ball.layers_.push_back(std::move(layer));
  }
  return ball;
}

std::vector<std::int64_t> sphere_sizes(const GraphProduct& gp, int radius, const EnumerationOptions& options) {
  return enumerate_ball(gp, radius, options).sphere_sizes();
}

std::vector<std::int64_t> ball_sizes(const GraphProduct& gp, int radius, const EnumerationOptions& options) {
  return enumerate_ball(gp, radius, options).ball_sizes();
}

std::vector<Rational> dc_sequence(const GraphProduct& gp, const BallIndex& ball, unsigned threads) {
  const int radius = ball.radius();
  std::vector<Element> elems = ball.elements(radius);
  std::vector<int> dist;
  for (int d = 0; d <= radius; ++d) dist.insert(dist.end(), ball.layer(d).size(), d);

  const std::size_t n = elems.size();
  const unsigned chunks = chunk_count(n, threads);
  std::vector<std::vector<std::int64_t>> partial(chunks, std::vector<std::int64_t>(radius + 1, 0));
  // Rows are dealt round-robin over the chunks so that the triangular work is balanced.
  parallel_tasks(chunks, [&](std::size_t chunk) {
    auto& counts = partial[chunk];
    for (std::size_t i = chunk; i < n; i += chunks) {
      counts[dist[i]] += 1;
      for (std::size_t j = i + 1; j < n; ++j)
        if (gp.commutes(elems[i], elems[j])) counts[std::max(dist[i], dist[j])] += 2;
    }
  });
  std::vector<Rational> out;
  std::int64_t pairs = 0;
  for (int m = 0; m <= radius; ++m) {
    for (const auto& counts : partial) pairs += counts[m];
    Rational b = ball.ball_size(m);
    out.push_back(Rational(pairs) / (b * b));
  }
  return out;
}

std::vector<Rational> dc_sequence_naive(const GraphProduct& gp, const BallIndex& ball) {
  std::vector<Rational> out;
  for (int m = 0; m <= ball.radius(); ++m) {
    auto elems = ball.elements(m);
    std::int64_t pairs = 0;
    for (const auto& x : elems)
      for (const auto& y : elems)
        if (gp.multiply(x, y) == gp.multiply(y, x)) ++pairs;
    Rational b = static_cast<std::int64_t>(elems.size());
    out.push_back(Rational(pairs) / (b * b));
  }
  return out;
}

std::int64_t count_tilde_support(const GraphProduct& gp, const BallIndex& ball, int n, VertexSet a, std::int64_t s) {
  if (n > ball.radius()) throw std::invalid_argument("ball index does not reach the requested radius");
  std::int64_t count = 0;
  for (const auto& g : ball.elements(n)) {
    auto r = gp.cyclically_reduce(g);
    if (r.reduced.support() == a && r.conjugator.word_length() <= s) ++count;
  }
  return count;
}

SubmultiplicativityResult submultiplicativity_audit(std::span<const BigInt> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i; i + j < seq.size(); ++j)
      if (seq[i + j] > seq[i] * seq[j]) return {false, i, j};
  return {};
}

std::vector<BigInt> to_big(std::span<const std::int64_t> seq) {
  return std::vector<BigInt>(seq.begin(), seq.end());
}

}  // namespace gpgrowth
