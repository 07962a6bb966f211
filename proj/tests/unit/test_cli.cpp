#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <fstream>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"
#include "laurexp/errors.hpp"
#include "laurexp/fixtures.hpp"
#include "laurexp/report.hpp"

using namespace laurexp;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture_path(const std::string& name) { return std::string(LAUREXP_FIXTURES_DIR) + "/" + name + ".spec"; }

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(LAUREXP_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_spec(const std::string& text) {
  static int counter = 0;
  const std::string path = ::testing::TempDir() + "laurexp_spec_" + std::to_string(counter++) + ".spec";
  std::ofstream(path) << text;
  return path;
}

const char* kEx1 =
    "p = 2\n"
    "b = 4\n"
    "images = [0001, 1001]\n"
    "coding = [0, 1]\n";

std::size_t error_line(const std::string& text) {
  try {
    parse_spec(text);
  } catch (const SpecError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST(ParseSpec, Minimal) {
  const ProblemSpec s = parse_spec(kEx1);
  EXPECT_EQ(s.p, 2u);
  EXPECT_EQ(s.b, 4u);
  EXPECT_EQ(s.m, 2u);
  EXPECT_EQ(s.images, (std::vector<Word>{{0, 0, 0, 1}, {1, 0, 0, 1}}));
  EXPECT_EQ(s.seed, 0u);
  EXPECT_EQ(s.n_check, 8u);
  EXPECT_EQ(s.search_k, 4u);
  EXPECT_EQ(s.search_l, 8u);
  EXPECT_EQ(s.depth, 200);
  EXPECT_FALSE(s.equation);
}

TEST(ParseSpec, ListImagesAndWitness) {
  const ProblemSpec s = parse_spec(
      "p = 3\nb = 3\nimages = [[0,1,0], [1,0,2], [1,2,2]]\ncoding = [0,1,2]\n"
      "witness_u = \"\"\nwitness_v = 010102\nwitness_omega = 8/3\n");
  EXPECT_EQ(s.images[1], (Word{1, 0, 2}));
  ASSERT_TRUE(s.witness_v);
  EXPECT_EQ(*s.witness_v, (Word{0, 1, 0, 1, 0, 2}));
  EXPECT_TRUE(s.witness_u->empty());
  EXPECT_EQ(*s.witness_omega, Rational(8, 3));
}

TEST(ParseSpec, LinePreciseErrors) {
  EXPECT_EQ(error_line("p = 2\nb = 4\nfoo = 1\nimages = [0001, 1001]\ncoding = [0, 1]\n"), 3u);
  EXPECT_EQ(error_line("p = 2\nb = 4\n\nimages = [0001, 101]\ncoding = [0, 1]\n"), 4u);
  EXPECT_EQ(error_line("p = 2\nb = 3\nimages = [001, 101]\ncoding = [0, 1]\n"), 2u);
  EXPECT_EQ(error_line("p = 4\nb = 4\nimages = [0001, 1001]\ncoding = [0, 1]\n"), 1u);
  EXPECT_EQ(error_line("p = 2\nb = 4\nimages = [1001, 1001]\ncoding = [0, 1]\n"), 3u);
  EXPECT_EQ(error_line("p = 2\nb = 4\nimages = [0001, 1001]\ncoding = [0, 1, 1]\n"), 4u);
  EXPECT_EQ(error_line("p = 2\nb = 4\nimages = [0002, 1001]\ncoding = [0, 1]\n"), 3u);
  EXPECT_EQ(error_line(std::string(kEx1) + "witness_omega = 1\nwitness_u = 0\nwitness_v = 0\n"), 5u);
  EXPECT_EQ(error_line(std::string(kEx1) + "n_check = x\n"), 5u);
  EXPECT_EQ(error_line(std::string(kEx1) + "p = 2\n"), 5u);
  EXPECT_EQ(error_line("b = 4\nimages = [0001, 1001]\ncoding = [0, 1]\n"), 0u);
}

TEST(Fixtures, EmbeddedTextMatchesFiles) {
  ASSERT_EQ(fixtures().size(), 6u);
  for (const auto& f : fixtures()) EXPECT_EQ(f.text, read_file(fixture_path(f.name))) << f.name;
  EXPECT_THROW(fixture("nope"), SpecError);
}

TEST(Analyze, Example1Exact) {
  const Report r = analyze(parse_spec(fixture("ex1").text));
  EXPECT_EQ(r.exact, std::optional<Rational>(3));
  EXPECT_EQ(r.e(), 2u);
}

TEST(Analyze, Example3Interval) {
  const Report r = analyze(parse_spec(fixture("ex3").text));
  EXPECT_EQ(r.refined.lower, Rational(8, 3));
  EXPECT_EQ(r.refined.upper, Rational(14, 5));
  EXPECT_FALSE(r.exact);
}

TEST(Analyze, SuppliedWitnessOverridesSearch) {
  AnalyzeOptions o;
  o.witness = parse_witness_flag(",0,2");
  const Report r = analyze(parse_spec(fixture("ex1").text), o);
  EXPECT_EQ(r.witness.omega, Rational(2));
  EXPECT_EQ(r.witness.mode, WitnessMode::supplied);
  EXPECT_FALSE(r.exact_agreement);
  EXPECT_EQ(r.theorem.lower, Rational(2));

  o.witness = parse_witness_flag(",0,4");
  EXPECT_THROW(analyze(parse_spec(fixture("ex1").text), o), SpecError);
  EXPECT_THROW(parse_witness_flag("0,1"), SpecError);
  EXPECT_THROW(parse_witness_flag(",,2"), SpecError);
}

TEST(Reproduce, Examples) {
  const Reproduction r2 = reproduce("ex2");
  EXPECT_TRUE(r2.ok()) << to_text(r2);
  EXPECT_EQ(r2.report.exact, std::optional<Rational>(5));

  const Reproduction r4 = reproduce("ex4");
  EXPECT_TRUE(r4.ok()) << to_text(r4);
  EXPECT_EQ(r4.report.exact, std::optional<Rational>(Rational(17, 5)));

  const Reproduction rm = reproduce("mahler");
  EXPECT_TRUE(rm.ok()) << to_text(rm);
  EXPECT_EQ(rm.report.witness.mode, WitnessMode::pigeonhole);
  EXPECT_EQ(rm.report.witness.omega, Rational(2));
  ASSERT_TRUE(rm.report.equation);
  EXPECT_TRUE(rm.report.equation->consistent);
}

TEST(Reproduce, AllFixtures) {
  for (const auto* name : {"ex1", "ex2", "ex3", "ex4", "thue-morse", "mahler"}) {
    const Reproduction r = reproduce(name);
    EXPECT_TRUE(r.ok()) << to_text(r);
  }
}

TEST(VerifyEquation, Examples) {
  const auto e1 = verify_equation(parse_spec(fixture("ex1").text), 500);
  EXPECT_TRUE(e1.consistent);
  EXPECT_EQ(e1.depth, 500);

  const auto tm = verify_equation(parse_spec(fixture("thue-morse").text), 500);
  EXPECT_TRUE(tm.consistent) << "first offending index " << tm.first_offending_index.value_or(-1);

  ProblemSpec perturbed = parse_spec(fixture("ex1").text);
  (*perturbed.equation)[0] = {1, 1};
  const auto bad = verify_equation(perturbed, 500);
  EXPECT_FALSE(bad.consistent);
  ASSERT_TRUE(bad.first_offending_index);
  EXPECT_EQ(*bad.first_offending_index, 0);  // the added constant is the T^0 coefficient
}

TEST(VerifyEquation, RequiresEquation) {
  EXPECT_THROW(verify_equation(parse_spec(fixture("ex2").text), 100), SpecError);
}

TEST(StructuredReport, FrozenKeys) {
  for (const auto& f : fixtures()) {
    const auto j = nlohmann::json::parse(to_json(analyze(parse_spec(f.text))));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    std::sort(keys.begin(), keys.end());
    EXPECT_EQ(keys, (std::vector<std::string>{"agreement", "assumptions", "automaton", "bounds", "coprimality",
                                              "equation", "kernel", "spec", "witness"}))
        << f.name;
    EXPECT_TRUE(j["kernel"].contains("s"));
    EXPECT_TRUE(j["kernel"].contains("elements"));
    EXPECT_TRUE(j["automaton"].contains("e"));
    for (const auto* k : {"general", "theorem", "refined", "exact"}) EXPECT_TRUE(j["bounds"].contains(k)) << k;
  }
}

TEST(StructuredReport, TextBoundsMatchExactRationals) {
  const Report r = analyze(parse_spec(fixture("ex3").text));
  const std::string text = to_text(r);
  EXPECT_NE(text.find("14/5 (≈ 2.800000)"), std::string::npos) << text;
  const auto j = nlohmann::json::parse(to_json(r));
  const std::regex bound(R"(([0-9]+(?:/[0-9]+)?) \(≈ ([0-9]+\.[0-9]+)\))");
  std::set<std::string> json_values;
  std::function<void(const nlohmann::json&)> collect = [&](const nlohmann::json& x) {
    if (x.is_object()) {
      for (const auto* key : {"lower", "upper", "exact"})
        if (x.contains(key) && x[key].is_string()) json_values.insert(x[key].get<std::string>());
      for (const auto& [_, v] : x.items()) collect(v);
    }
  };
  collect(j["bounds"]);
  std::size_t seen = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), bound); it != std::sregex_iterator(); ++it) {
    const std::string exact = (*it)[1];
    EXPECT_EQ((*it)[2].str(), to_decimal(parse_rational(exact)));
    EXPECT_TRUE(json_values.count(exact)) << exact;
    ++seen;
  }
  EXPECT_GT(seen, 5u);
}

TEST(StructuredReport, Deterministic) {
  for (const auto& f : fixtures()) {
    const ProblemSpec s = parse_spec(f.text);
    EXPECT_EQ(to_json(analyze(s)), to_json(analyze(s))) << f.name;
  }
}

TEST(CommandLine, ExitCodes) {
  EXPECT_EQ(run("analyze " + fixture_path("ex1")).code, 0);
  EXPECT_EQ(run("analyze " + fixture_path("ex3") + " --format json").code, 0);
  EXPECT_EQ(run("analyze /nonexistent.spec").code, 2);
  EXPECT_EQ(run("analyze " + temp_spec("p = 2\nb = 2\nimages = [10, 01]\ncoding = [0, 1]\n")).code, 2);
  EXPECT_EQ(run("analyze " + temp_spec("p = 2\nb = 4\nimages = [0001]\ncoding = [0, 1]\n")).code, 2);
  EXPECT_EQ(run("analyze " + fixture_path("ex1") + " --format yaml").code, 2);
  EXPECT_EQ(run("analyze " + fixture_path("ex1") + " --witness ,0,2 --search-k 2").code, 2);
  EXPECT_EQ(run("analyze " + fixture_path("ex2") + " --n-check 40").code, 3);
  EXPECT_EQ(run("reproduce nope").code, 2);
  EXPECT_EQ(run("verify-equation " + fixture_path("ex2")).code, 2);
  EXPECT_EQ(run("verify-equation " + fixture_path("ex1") + " --depth 300").code, 0);
}

TEST(CommandLine, ReproduceExitCodes) {
  for (const auto* name : {"ex1", "ex2", "ex3", "ex4", "thue-morse", "mahler"}) {
    const CliRun r = run(std::string("reproduce ") + name);
    EXPECT_EQ(r.code, 0) << r.out;
  }
}

TEST(CommandLine, NonProlongableDiagnostic) {
  const std::string path = temp_spec("p = 2\nb = 2\nimages = [10, 01]\ncoding = [0, 1]\n");
  const std::string cmd = std::string(LAUREXP_CLI) + " analyze " + path + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[512];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  pclose(pipe);
  EXPECT_NE(out.find("not prolongable"), std::string::npos) << out;
}

TEST(CommandLine, JsonIsStableAcrossRuns) {
  for (const auto* name : {"ex1", "ex2", "ex3", "ex4", "thue-morse", "mahler"}) {
    const CliRun a = run("analyze " + fixture_path(name) + " --format json");
    const CliRun b = run("analyze " + fixture_path(name) + " --format json");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << name;
  }
}
