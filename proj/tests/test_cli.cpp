#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "gpgrowth/commands.hpp"

using namespace gpgrowth;

namespace {

std::string spec_error(const std::string& text) {
  try {
    parse_group_spec(text);
  } catch (const SpecError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(GroupSpec, ParsesFixture) {
  auto spec = fixtures::load("mixed");
  EXPECT_EQ(spec.product.vertex_count(), 3u);
  EXPECT_EQ(spec.product.group(spec.product.index_of("c")).order(), 3);
  EXPECT_EQ(spec.digest.size(), 64u);
}

TEST(GroupSpec, Diagnostics) {
  EXPECT_NE(spec_error(R"({"vertices": ["a"], "edges": [["a", "b"]], "groups": {"a": {"type": "Z"}}})")
                .find("$.edges[0][1]"),
            std::string::npos);
  EXPECT_NE(spec_error(R"({"vertices": ["a"], "edges": [["a", "a"]], "groups": {"a": {"type": "Z"}}})"), "");
  EXPECT_NE(spec_error(R"({"vertices": ["a"], "edges": [], "groups": {"a": {"type": "cyclic"}}})").find("$.groups.a"),
            std::string::npos);
  EXPECT_NE(spec_error(R"({"vertices": ["a"], "edges": [], "groups": {}})"), "");
  EXPECT_NE(spec_error(R"({"vertices": ["a"], "edges": [], "groups": {"a": {"type": "Z"}}, "options": {"bogus": 1}})"),
            "");
  EXPECT_NE(spec_error("{\n\"vertices\": [\n"), "");
  EXPECT_EQ(spec_error(R"({"vertices": ["a"], "edges": [], "groups": {"a": {"type": "Z"}}})"), "");
}

TEST(GroupSpec, Sha256) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(GroupSpec, Sequences) {
  std::istringstream in("1 # first\n\n2\n  3\n");
  EXPECT_EQ(parse_sequence(in), (std::vector<BigInt>{1, 2, 3}));
  std::istringstream bad("1\nx\n");
  try {
    parse_sequence(bad);
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Report, FormatsAreDeterministicAcrossThreads) {
  auto spec = fixtures::load("p3");
  CommandOptions one, four;
  one.radius = four.radius = 5;
  four.threads = 4;
  for (auto fmt : {ReportFormat::Text, ReportFormat::Json, ReportFormat::Csv}) {
    EXPECT_EQ(cmd_growth(spec, one).report.render(fmt), cmd_growth(spec, four).report.render(fmt));
    EXPECT_EQ(cmd_dc(spec, one).report.render(fmt), cmd_dc(spec, four).report.render(fmt));
  }
  auto json = nlohmann::json::parse(cmd_growth(spec, one).report.render(ReportFormat::Json));
  EXPECT_EQ(json["command"], "growth");
  EXPECT_EQ(json["meta"]["radius"], "5");
  EXPECT_EQ(json["meta"]["input_digest"], spec.digest);
}

TEST(Report, RenderingShapes) {
  Report r("demo");
  r.set_meta("radius", "3");
  r.add_fields("summary", {{"x", "1"}});
  r.add_table("t", {"n", "v"}, {{"0", "1"}, {"1", "2"}});
  EXPECT_NE(r.render(ReportFormat::Csv).find("n,v\n0,1\n1,2\n"), std::string::npos);
  EXPECT_NE(r.render(ReportFormat::Text).find("x"), std::string::npos);
  EXPECT_EQ(parse_report_format("json"), ReportFormat::Json);
  EXPECT_THROW(parse_report_format("xml"), std::invalid_argument);
}

TEST(Commands, GrowthOfFreeGroup) {
  CommandOptions o;
  o.radius = 8;
  auto res = cmd_growth(fixtures::load("f2"), o);
  EXPECT_EQ(res.exit_code, kExitOk);
  EXPECT_NE(res.report.render(ReportFormat::Text).find("(1 + t) / (1 - 3*t)"), std::string::npos);
}

TEST(Commands, BudgetGivesPartialReport) {
  CommandOptions o;
  o.radius = 10;
  o.memory_budget = 20000;
  auto res = cmd_growth(fixtures::load("f2"), o);
  EXPECT_EQ(res.exit_code, kExitBudget);
  EXPECT_TRUE(res.report.partial());
}

TEST(Commands, SeriesBuiltins) {
  CommandOptions o;
  auto ex = cmd_series("example-i", o).report.render(ReportFormat::Text);
  EXPECT_NE(ex.find("1 + 12*t^2 - 16*t^3"), std::string::npos);
  o.max_order = 8;
  auto ds = cmd_series("digit-sum", o).report.render(ReportFormat::Text);
  EXPECT_NE(ds.find("none found"), std::string::npos);
  EXPECT_THROW(cmd_series("no-such-file.txt", o), std::exception);
}

TEST(Commands, CentraliserRejectsIdentity) {
  auto spec = fixtures::load("f2");
  EXPECT_THROW(cmd_centraliser(spec, "a a^-1", {}), InputError);
  EXPECT_THROW(cmd_centraliser(spec, "z", {}), std::invalid_argument);
}

TEST(Commands, SelfcheckPasses) {
  CommandOptions o;
  o.seed = 3;
  for (const auto& name : {"mixed", "s3", "pentagon_racg"}) EXPECT_EQ(cmd_selfcheck(fixtures::load(name), o).exit_code, 0);
}
