#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gpgrowth/centraliser.hpp"
#include "gpgrowth/commands.hpp"
#include "gpgrowth/word_io.hpp"

using namespace gpgrowth;

namespace {

std::size_t parse_bytes(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long v = std::stoull(text, &pos);
  std::string suffix = text.substr(pos);
  if (suffix.empty()) return v;
  if (suffix == "K" || suffix == "KiB") return v << 10;
  if (suffix == "M" || suffix == "MiB") return v << 20;
  if (suffix == "G" || suffix == "GiB") return v << 30;
  throw InputError("bad memory budget '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth, centralisers and degree of commutativity in graph products of groups"};
  app.require_subcommand(1);
  app.fallthrough();

  CommandOptions opts;
  int radius = -1, max_order = -1;
  std::string budget, format = "text";
  double tolerance = 0;
  app.add_option("--radius", radius, "Enumeration radius N (or number of terms - 1 for series)");
  app.add_option("--max-order", max_order, "Largest recurrence order searched");
  app.add_option("--memory-budget", budget, "Memory budget in bytes (suffixes K, M, G)");
  app.add_option("--threads", opts.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", opts.seed, "Seed for randomized checks");
  app.add_option("--tolerance", tolerance, "Numeric tolerance")->check(CLI::PositiveNumber);

  std::string spec_path, word, source;
  auto* growth = app.add_subcommand("growth", "Spheres, rational growth series and asymptotic profile");
  growth->add_option("spec", spec_path, "Group spec file")->required();
  auto* dc = app.add_subcommand("dc", "Degree-of-commutativity sequence");
  dc->add_option("spec", spec_path, "Group spec file")->required();
  auto* cent = app.add_subcommand("centraliser", "Centraliser structure of an element");
  cent->add_option("spec", spec_path, "Group spec file")->required();
  cent->add_option("word", word, "Element, e.g. \"a^1 b^-1\"")->required();
  auto* series = app.add_subcommand("series", "Recurrence search on an integer sequence");
  series->add_option("source", source, "example-i, digit-sum, or a sequence file")->required();
  auto* ball = app.add_subcommand("ball", "List the ball B(N) in canonical form");
  ball->add_option("spec", spec_path, "Group spec file")->required();
  auto* self = app.add_subcommand("selfcheck", "Randomized normal-form consistency checks");
  self->add_option("spec", spec_path, "Group spec file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (radius >= 0) opts.radius = radius;
    if (max_order >= 0) opts.max_order = max_order;
    if (!budget.empty()) opts.memory_budget = parse_bytes(budget);
    if (tolerance > 0) opts.tolerance = tolerance;
    const ReportFormat fmt = parse_report_format(format);

    CommandResult result = [&] {
      if (*series) return cmd_series(source, opts);
      GroupSpec spec = load_group_spec(spec_path);
      if (*growth) return cmd_growth(spec, opts);
      if (*dc) return cmd_dc(spec, opts);
      if (*cent) return cmd_centraliser(spec, word, opts);
      if (*ball) return cmd_ball(spec, opts);
      return cmd_selfcheck(spec, opts);
    }();
    std::cout << result.report.render(fmt);
    if (result.exit_code == kExitBudget) std::cerr << "warning: memory budget exhausted; report is partial\n";
    return result.exit_code;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const CentraliserError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  }
  return kExitInput;
}
