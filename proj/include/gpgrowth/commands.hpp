#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpgrowth/enumeration.hpp"
#include "gpgrowth/group_spec.hpp"
#include "gpgrowth/profile.hpp"
#include "gpgrowth/report.hpp"
#include "gpgrowth/series.hpp"

namespace gpgrowth {

inline constexpr int kDefaultRadius = 8;
inline constexpr long double kDefaultTolerance = 1e-9L;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

enum ExitCode : int { kExitOk = 0, kExitInput = 2, kExitBudget = 3 };

// Bad command input (as opposed to a malformed spec file).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Command-line settings; unset fields fall back to the spec options, then
// to the defaults above.
struct CommandOptions {
  std::optional<int> radius;
  std::optional<int> max_order;
  std::optional<std::size_t> memory_budget;
  std::optional<long double> tolerance;
  unsigned threads = 1;
  std::uint64_t seed = kDefaultSeed;
};

struct CommandResult {
  Report report;
  int exit_code = kExitOk;
};

struct GrowthAnalysis {
  std::vector<BigInt> spheres;
  std::vector<BigInt> balls;
  // "direct", "join-product" or "none".
  std::string method = "none";
  std::optional<RationalSeries> series;
  std::optional<RationalSeries> ball_series;
  std::optional<AsymptoticProfile> sphere_profile;
  std::optional<AsymptoticProfile> ball_profile;
  std::string profile_note;  // why a profile is missing
};

// Rational reconstruction of the sphere sequence of gp from the enumerated
// ball. When the complement of the presentation graph is disconnected, G is
// the direct product of the special subgroups on the components, and the
// series is also assembled from the factors (which need fewer terms).
GrowthAnalysis analyse_growth(const GraphProduct& gp, const BallIndex& ball, int max_order,
                              const EnumerationOptions& options, const ProfileOptions& profile_options = {});

// Parts (A, link A) when Gamma is K_{k,k} with k >= 1.
std::optional<std::pair<VertexSet, VertexSet>> complete_bipartite_parts(const GraphProduct& gp);

CommandResult cmd_growth(const GroupSpec& spec, const CommandOptions& options);
CommandResult cmd_dc(const GroupSpec& spec, const CommandOptions& options);
CommandResult cmd_centraliser(const GroupSpec& spec, const std::string& word, const CommandOptions& options);
// source: "example-i", "digit-sum", or a sequence file.
CommandResult cmd_series(const std::string& source, const CommandOptions& options);
CommandResult cmd_ball(const GroupSpec& spec, const CommandOptions& options);
// Randomized consistency checks of the normal form (associativity,
// inverses, shuffle invariance) driven by options.seed.
CommandResult cmd_selfcheck(const GroupSpec& spec, const CommandOptions& options);

}  // namespace gpgrowth
