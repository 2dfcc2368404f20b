#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tropjac/cli.hpp"

using namespace tropjac;
using namespace tropjac::cli;
namespace fs = std::filesystem;

namespace {

const std::string kSamples = TROPJAC_SAMPLES_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome invoke(RunConfig cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig on_sample(std::string command, std::string file, std::string sub = "") {
  RunConfig cfg;
  cfg.command = std::move(command);
  cfg.subcommand = std::move(sub);
  cfg.graph_path = kSamples + "/" + file;
  return cfg;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("tropjac_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, PeriodOfThetaGraph) {
  const auto r = invoke(on_sample("period", "theta.json"));
  EXPECT_EQ(r.code, kOk);
  const auto doc = r.json();
  EXPECT_EQ(doc["schema_version"], kSchemaVersion);
  EXPECT_EQ(doc["period_matrix"].dump(), R"([["2","1"],["1","2"]])");
}

TEST(Cli, VerifyPoincareOnThetaGraph) {
  const auto r = invoke(on_sample("verify", "theta.json", "poincare"));
  EXPECT_EQ(r.code, kOk);
  const auto report = r.json()["report"];
  EXPECT_TRUE(report["all_passed"].get<bool>());
  EXPECT_EQ(report["records"].size(), 3u);
  for (const auto& rec : report["records"]) EXPECT_TRUE(rec["equal"].get<bool>());
}

TEST(Cli, DegreeThetaG) {
  RunConfig cfg;
  cfg.command = "degree";
  cfg.subcommand = "theta-g";
  cfg.genus = 4;
  const auto r = invoke(cfg);
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.json()["degree"], "24");
}

TEST(Cli, ThetaEvalAndDivisor) {
  auto cfg = on_sample("theta", "theta.json", "eval");
  cfg.x = "1,0";
  auto r = invoke(cfg);
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.json()["theta"]["value"], "0");
  EXPECT_EQ(r.json()["theta"]["minimizers"].size(), 3u);
  cfg.subcommand = "divisor-test";
  cfg.x = "0,0";
  r = invoke(cfg);
  EXPECT_FALSE(r.json()["on_theta_divisor"].get<bool>());
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(invoke(on_sample("period", "missing.json")).code, kInputError);
  auto cfg = on_sample("wd-cells", "theta.json");
  cfg.d = 5;
  const auto r = invoke(cfg);
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("DOutOfRange"), std::string::npos);
  RunConfig deg;
  deg.command = "degree";
  deg.subcommand = "theta-g";
  EXPECT_EQ(invoke(deg).code, kInputError);
}

TEST(Cli, OutputIsByteStable) {
  auto cfg = on_sample("wd-cells", "k4.json");
  cfg.d = 2;
  const auto a = invoke(cfg);
  const auto b = invoke(cfg);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TextFormat) {
  auto cfg = on_sample("period", "theta.json");
  cfg.format = Format::text;
  const auto r = invoke(cfg);
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("(2, 1)"), std::string::npos);
}

TEST(Corpus, SampleTrioPasses) {
  const auto dir = scratch_dir("trio");
  for (auto name : {"circle.json", "theta.json", "dumbbell.json"}) fs::copy_file(kSamples + "/" + name, dir / name);
  std::ostringstream out, err;
  EXPECT_EQ(corpus_run(dir.string(), Format::json, out, err), kOk);
  const auto doc = Json::parse(out.str());
  EXPECT_EQ(doc["passed"], 3);
  EXPECT_EQ(doc["total"], 3);
}

TEST(Corpus, EmptyDirectoryIsAnInputError) {
  const auto dir = scratch_dir("empty");
  std::ostringstream out, err;
  EXPECT_EQ(corpus_run(dir.string(), Format::json, out, err), kInputError);
  EXPECT_EQ(corpus_run((dir / "nope").string(), Format::json, out, err), kInputError);
}

TEST(Corpus, MalformedFileIsFlaggedOthersRun) {
  const auto dir = scratch_dir("malformed");
  fs::copy_file(kSamples + "/theta.json", dir / "a_theta.json");
  fs::copy_file(kSamples + "/circle.json", dir / "c_circle.json");
  std::ofstream(dir / "b_broken.json") << "{\"vertices\": [\"v\"], \"edges\": [";
  std::ostringstream out, err;
  EXPECT_EQ(corpus_run(dir.string(), Format::json, out, err), kInputError);
  const auto doc = Json::parse(out.str());
  ASSERT_EQ(doc["files"].size(), 3u);
  EXPECT_EQ(doc["files"][0]["status"], "pass");
  EXPECT_EQ(doc["files"][1]["status"], "error");
  EXPECT_EQ(doc["files"][2]["status"], "pass");
  EXPECT_EQ(doc["passed"], 2);
}

TEST(Corpus, GeneratedGraphsAllPass) {
  const auto dir = scratch_dir("generated");
  RunConfig gen;
  gen.command = "generate";
  gen.out_dir = dir.string();
  gen.count = 12;
  gen.seed = 5;
  EXPECT_EQ(invoke(gen).code, kOk);
  std::ostringstream out, err;
  EXPECT_EQ(corpus_run(dir.string(), Format::text, out, err), kOk);
  EXPECT_NE(out.str().find("12/12 passed"), std::string::npos);
}
