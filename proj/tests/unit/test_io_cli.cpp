#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperwalk/cli.hpp"
#include "hyperwalk/error.hpp"
#include "hyperwalk/io.hpp"

using namespace hyperwalk;

namespace {

const std::string kData = HYPERWALK_DATA_DIR;

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hyperwalk_test_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(std::vector<std::string> args) {
  std::vector<const char*> argv{"hyperwalk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli::main_entry(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST(Io, BundledFixturesParse) {
  const auto k4 = io::parse_pattern(kData + "/k4.json");
  EXPECT_EQ(k4.kappa(), 4);
  EXPECT_EQ(k4.triples().size(), 4u);
  EXPECT_EQ(io::parse_pattern(kData + "/triple.json").triples().size(), 1u);
  EXPECT_EQ(io::parse_pattern(kData + "/h7_assoc.json").kappa(), 7);
  EXPECT_EQ(io::parse_schedule(kData + "/schedules/k4_reference.json").size(), 14u);
  EXPECT_EQ(io::parse_schedule(kData + "/schedules/h7_reference.json").size(), 22u);
  const auto params = io::parse_params(kData + "/params/k4_reference.json");
  EXPECT_EQ(params.z.at(Triple{1, 2, 3}), Rational(241, 128));
  EXPECT_EQ(io::parse_params(kData + "/params/h7_reference.json").z.at(Triple{1, 5, 7}),
            Rational(169, 80));
  EXPECT_EQ(io::parse_operator(kData + "/operators/mod3.json").n(), 3);
}

TEST(Io, ExactValuesRoundTrip) {
  const auto params = io::parse_params(kData + "/params/k4_reference.json");
  const auto again = io::params_from_json(io::to_json(params), "roundtrip");
  EXPECT_EQ(again.x, params.x);
  EXPECT_EQ(again.y, params.y);
  EXPECT_EQ(again.z, params.z);
  const auto pattern = io::parse_pattern(kData + "/h7_assoc.json");
  const auto p2 = io::pattern_from_json(io::to_json(pattern), "roundtrip");
  EXPECT_EQ(p2.triples(), pattern.triples());
  EXPECT_EQ(p2.directions(), pattern.directions());
  EXPECT_EQ(io::exact(Rational(-3, 6)), "-1/2");
}

TEST(Io, DiagnosticsCarryLocation) {
  const auto bad = write_temp("bad_triple.json", R"({"kappa": 3, "triples": [[1, 1, 2]]})");
  EXPECT_THROW(io::parse_pattern(bad), ValidationError);
  const auto broken = write_temp("broken.json", "{\n  \"kappa\": 3,\n  \"triples\": [[1, 2, 3]\n}");
  try {
    io::parse_pattern(broken);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(":4:"), std::string::npos) << e.what();
  }
  const auto wrong_type = write_temp("wrong.json", R"({"kappa": 3, "triples": [[1, 2, "x"]]})");
  try {
    io::parse_pattern(wrong_type);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("/triples/0/2"), std::string::npos) << e.what();
  }
  const auto bad_rational = write_temp("bad_rat.json", R"({"x": {"1": "1/0"}, "y": {}, "z": {}})");
  EXPECT_THROW(io::parse_params(bad_rational), Error);
  EXPECT_THROW(io::parse_pattern(temp_path("does_not_exist.json")), ParseError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}), cli::kUsage);
  EXPECT_EQ(run_cli({"optimize", "--pattern", kData + "/triple.json"}), cli::kUsage);
  EXPECT_EQ(run_cli({"schedules", "--pattern", temp_path("missing.json"), "--count-only"}),
            cli::kInputError);
  const auto out = temp_path("count.json");
  EXPECT_EQ(run_cli({"--output", out, "schedules", "--pattern", kData + "/triple.json",
                     "--count-only"}),
            cli::kOk);
  EXPECT_EQ(io::read_json(out).at("count"), 48);
  EXPECT_EQ(run_cli({"--output", out, "evaluate", "--pattern", kData + "/h7_assoc.json",
                     "--schedule", kData + "/schedules/h7_reference.json", "--params",
                     kData + "/params/h7_reference.json", "--strict-vertex"}),
            cli::kVerdictFail);
  EXPECT_EQ(run_cli({"--output", out, "simulate", "--check", "regularity", "--params",
                     write_temp("reg.json", R"({"r": [16, 16, 16], "f": [1024, 1024]})")}),
            cli::kInputError);
}

TEST(Cli, SeedPrecedence) {
  ::unsetenv("HYPERWALK_SEED");
  EXPECT_EQ(cli::resolve_seed(std::nullopt), kDefaultSeed);
  ::setenv("HYPERWALK_SEED", "42", 1);
  EXPECT_EQ(cli::resolve_seed(std::nullopt), 42u);
  EXPECT_EQ(cli::resolve_seed(7), 7u);
  ::setenv("HYPERWALK_SEED", "nope", 1);
  EXPECT_THROW(cli::resolve_seed(std::nullopt), ParseError);
  ::unsetenv("HYPERWALK_SEED");
}

TEST(Cli, ReportsAreByteIdenticalAcrossJobs) {
  const auto a = temp_path("jobs1.json");
  const auto b = temp_path("jobs2.json");
  ASSERT_EQ(run_cli({"--output", a, "optimize", "--pattern", kData + "/triple.json",
                     "--exhaustive", "--jobs", "1"}),
            cli::kOk);
  ASSERT_EQ(run_cli({"--output", b, "optimize", "--pattern", kData + "/triple.json",
                     "--exhaustive", "--jobs", "2"}),
            cli::kOk);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(io::read_json(a).at("exponent"), io::read_json(b).at("exponent"));

  const auto c = temp_path("sim1.json");
  const auto d = temp_path("sim2.json");
  for (const auto& path : {c, d}) {
    ASSERT_EQ(run_cli({"--output", path, "simulate", "--check", "lambda-claim", "--trials", "500",
                       "--seed", "3"}),
              cli::kOk);
  }
  EXPECT_EQ(slurp(c), slurp(d));
}

TEST(Cli, DocumentedCommandsRunOnFixtures) {
  const auto out = temp_path("cmd.json");
  EXPECT_EQ(run_cli({"--output", out, "schedules", "--pattern", kData + "/k4.json", "--limit", "3"}),
            cli::kOk);
  EXPECT_EQ(io::read_json(out).at("schedules").size(), 3u);
  EXPECT_EQ(run_cli({"--output", out, "schedules", "--pattern", kData + "/h7_assoc.json",
                     "--heuristic", "--budget", "5", "--seed", "1"}),
            cli::kOk);
  EXPECT_EQ(io::read_json(out).at("schedules").size(), 5u);
  EXPECT_EQ(run_cli({"--output", out, "schedules", "--pattern", kData + "/k4.json", "--schedule",
                     kData + "/schedules/k4_reference.json"}),
            cli::kOk);
  EXPECT_EQ(run_cli({"--output", out, "optimize", "--pattern", kData + "/k4.json", "--schedule",
                     kData + "/schedules/k4_reference.json"}),
            cli::kOk);
  EXPECT_EQ(io::read_json(out).at("exponent"), "241/128");
  EXPECT_EQ(run_cli({"--output", out, "optimize", "--pattern", kData + "/h7_assoc.json",
                     "--heuristic", "--budget", "3", "--schedule",
                     kData + "/schedules/h7_reference.json"}),
            cli::kOk);
  EXPECT_EQ(run_cli({"--output", out, "evaluate", "--pattern", kData + "/k4.json", "--schedule",
                     kData + "/schedules/k4_reference.json", "--params",
                     kData + "/params/k4_reference.json"}),
            cli::kOk);
  EXPECT_EQ(io::read_json(out).at("exponent"), "241/128");
  EXPECT_EQ(run_cli({"--output", out, "verify", "tails", "--nmax", "12"}), cli::kOk);
  EXPECT_EQ(io::read_json(out).at("violations").size(), 0u);
  EXPECT_EQ(run_cli({"--output", out, "find", "--pattern", kData + "/k4.json", "--instance",
                     kData + "/instances/k4_planted.json"}),
            cli::kOk);
  EXPECT_EQ(io::read_json(out).at("found"), true);
  EXPECT_EQ(run_cli({"--output", out, "assoc", "check", "--table", kData + "/operators/mod3.json"}),
            cli::kOk);
  EXPECT_EQ(io::read_json(out).at("associative"), true);
  EXPECT_EQ(run_cli({"--output", out, "assoc", "certificate", "--table",
                     kData + "/operators/middle3.json", "--case", "ii", "--via-reduction"}),
            cli::kOk);
  EXPECT_EQ(io::read_json(out).at("verified"), true);
  for (const char* check : {"lemma3", "vertex-swap", "pair-swap", "regularity"}) {
    const int code = run_cli({"--output", out, "simulate", "--check", check, "--trials", "20",
                              "--params", kData + "/params/sim_small.json"});
    EXPECT_TRUE(code == cli::kOk || code == cli::kVerdictFail) << check;
  }
}
