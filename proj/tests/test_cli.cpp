#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "splicekit_cli/app.hpp"
#include "splicekit_cli/bundle.hpp"
#include "splicekit_cli/dot.hpp"

using namespace splicekit;
using namespace splicekit::cli;

namespace {

struct CliRun {
  int code = 0;
  std::string out, err;
};

CliRun run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  CliRun r;
  r.code = run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::vector<std::string> kWorkedArgs{"--family", "f1", "--pqparams", "1,1,1,2", "--a",
                                           "2",        "--alphas", "1",   "--betas",   "3"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "splicekit_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Generate, WorkedBundle) {
  const CliRun r = run_cli(with({"generate"}, kWorkedArgs));
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["invariants"]["degree"], 8);
  EXPECT_EQ(j["plumbing"]["vertices"].size(), 7u);
  EXPECT_EQ(j["monodromy"]["h_infinity"], json::parse("[1,2,2,1]"));
  for (const auto& p : j["report"]) EXPECT_NE(p["status"], "fail") << p.dump();
  std::vector<std::string> values;
  for (const auto& v : j["irregular_values"]["values"]) values.push_back(v.get<std::string>());
  EXPECT_EQ(values, (std::vector<std::string>{"0/1", "3/1", "9/1"}));
}

TEST(Generate, InvalidParams) {
  const CliRun r = run_cli({"generate", "--family", "f1", "--pqparams", "1,1,2,1", "--a", "2"});
  EXPECT_EQ(r.code, kInvalid);
  EXPECT_NE(r.err.find("Pq-pQ"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Generate, F3Bundle) {
  const CliRun r = run_cli({"generate", "--family", "f3", "--a", "2", "--betas", "1", "--h", "0,1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json j = json::parse(r.out);
  const MultiPoly f = MultiPoly::parse(j["polynomials"]["f"].get<std::string>());
  const MultiPoly X = MultiPoly::x(), Y = MultiPoly::y();
  EXPECT_EQ(f, Y * (X - MultiPoly(1)).pow(2) + X);
}

TEST(Generate, RequestFromStdin) {
  const std::string req =
      R"({"family":"f1","pqparams":[1,1,1,2],"a":[2],"alphas":["1"],"betas":["3"]})";
  const CliRun r = run_cli({"generate", "--in", "-"}, req);
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["invariants"]["degree"], 8);
}

TEST(Generate, MalformedArguments) {
  EXPECT_EQ(run_cli({"generate", "--family", "f9"}).code, kInvalid);
  EXPECT_EQ(run_cli({"generate", "--family", "f1", "--pqparams", "1,1"}).code, kInvalid);
  EXPECT_EQ(run_cli({"bogus"}).code, kInvalid);
}

TEST(Generate, OutputFileAndIoFailure) {
  const auto path = scratch("bundle.json");
  std::filesystem::remove(path);
  CliRun r = run_cli(with({"generate", "--out", path.string()}, kWorkedArgs));
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  ASSERT_TRUE(std::filesystem::exists(path));
  EXPECT_FALSE(std::filesystem::exists(path.string() + ".partial"));

  const auto missing = scratch("no_such_dir") / "x" / "bundle.json";
  r = run_cli(with({"generate", "--out", missing.string()}, kWorkedArgs));
  EXPECT_EQ(r.code, kIoFailure);
  EXPECT_FALSE(std::filesystem::exists(missing));
  EXPECT_EQ(run_cli({"verify", "--in", missing.string()}).code, kIoFailure);
}

TEST(Bundle, JsonRoundTrip) {
  std::mt19937_64 rng(99);
  for (Family fam : {Family::F1, Family::F2, Family::F3}) {
    for (int n = 0; n < 4; ++n) {
      Bundle b = assemble(sample_instance(sample_params(fam, {12, 4, 3}, rng), rng));
      CheckOptions opt;
      opt.samples = 5;
      b.report = verify_bundle(b, opt);
      const json j = to_json(b);
      const Bundle back = bundle_from(json::parse(j.dump()));
      ASSERT_TRUE(back == b) << to_string(fam);
      ASSERT_EQ(to_json(back).dump(), j.dump());
    }
  }
}

TEST(Verify, TamperedBundleFails) {
  const CliRun gen = run_cli(with({"generate"}, kWorkedArgs));
  ASSERT_EQ(gen.code, kOk);
  json j = json::parse(gen.out);
  for (auto& v : j["plumbing"]["vertices"])
    if (v["role"] == "l_infty") v["weight"] = -3;
  const CliRun r = run_cli({"verify", "--in", "-"}, j.dump());
  EXPECT_EQ(r.code, kInvariantFailure);
  const json rep = json::parse(r.out);
  std::set<std::string> failed;
  for (const auto& p : rep["results"])
    if (p["status"] == "fail") failed.insert(p["property"].get<std::string>());
  EXPECT_TRUE(failed.count("morrow_reduction") || failed.count("unimodular"));
}

TEST(Verify, UntouchedBundlePasses) {
  const CliRun gen = run_cli(with({"generate"}, kWorkedArgs));
  const CliRun r = run_cli({"verify", "--in", "-"}, gen.out);
  EXPECT_EQ(r.code, kOk) << r.out;
}

TEST(Verify, RussellFixture) {
  const CliRun r = run_cli({"verify", "--fixture", "russell"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json rep = json::parse(r.out);
  bool degree_seen = false;
  for (const auto& p : rep["results"]) {
    if (p["property"] == "degree") {
      degree_seen = true;
      EXPECT_EQ(p["status"], "pass");
    } else if (p["property"] != "evaluation") {
      EXPECT_EQ(p["status"], "not_applicable") << p.dump();
    }
  }
  EXPECT_TRUE(degree_seen);
  EXPECT_EQ(run_cli({"verify", "--fixture", "nope"}).code, kInvalid);
}

TEST(Verify, SweepIsReproducible) {
  SweepOptions opt;
  opt.count = 6;
  opt.seed = 5;
  opt.bounds = {10, 3, 2};
  opt.samples = 5;
  opt.threads = 1;
  const auto a = run_sweep(opt);
  opt.threads = 3;
  const auto b = run_sweep(opt);
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.body.dump(), b.body.dump());
  const std::vector<std::string> args{"verify", "--count", "4", "--seed", "3", "--max-pqpq", "8",
                                      "--max-r", "3", "--max-a", "2", "--samples", "5"};
  const CliRun r1 = run_cli(args), r2 = run_cli(args);
  EXPECT_EQ(r1.code, kOk);
  EXPECT_EQ(r1.out, r2.out);
}

TEST(ExportDot, WorkedGraph) {
  const CliRun r = run_cli(with({"export-dot", "--section", "plumbing"}, kWorkedArgs));
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(count_matches(r.out, R"(\n  v\d+ \[)"), 7u);
  EXPECT_EQ(count_matches(r.out, R"(v\d+ -- v\d+)"), 6u);
  EXPECT_EQ(count_matches(r.out, R"(v\d+ -- t\d+_\d+)"), 4u);
  EXPECT_EQ(r.out, run_cli(with({"export-dot", "--section", "plumbing"}, kWorkedArgs)).out);
}

TEST(ExportDot, F3Graph) {
  const CliRun r = run_cli({"export-dot", "--section", "plumbing", "--family", "f3", "--a", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(count_matches(r.out, R"(\n  v\d+ \[)"), 4u);
}

TEST(ExportDot, SpliceAndBadSection) {
  const CliRun r = run_cli(with({"export-dot", "--section", "splice"}, kWorkedArgs));
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("style=filled"), std::string::npos);
  EXPECT_EQ(run_cli(with({"export-dot", "--section", ""}, kWorkedArgs)).code, kInvalid);
  EXPECT_EQ(run_cli(with({"export-dot", "--section", "fibres"}, kWorkedArgs)).code, kInvalid);
}

TEST(OtherCommands, NormalFormMonodromyFibres) {
  CliRun r = run_cli({"normal-form", "--family", "f1", "--pqparams", "2,1,3,2", "--a", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["q1"], 1);
  EXPECT_EQ(j["p1"], 1);

  r = run_cli({"monodromy", "--r", "3", "--maxlen", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["h_infinity"], json::parse("[1,2,3,3,2,1]"));
  EXPECT_TRUE(j["free_probe"]["free"].get<bool>());

  r = run_cli({"fibres", "--family", "f1", "--pqparams", "1,1,1,2", "--a", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["fibres"].size(), 3u);
  EXPECT_EQ(j["fibres"][0]["components"][0], json::parse(R"({"type":"C","punctures":2})"));
}
