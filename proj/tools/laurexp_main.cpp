#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "laurexp/errors.hpp"
#include "laurexp/fixtures.hpp"
#include "laurexp/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kSpecError = 2;
constexpr int kBudget = 3;
constexpr int kMismatch = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irrationality exponent bounds for automatic Laurent series over finite fields"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string format = "text";
  std::uint32_t n_check = 8;
  std::size_t search_k = 4;
  std::size_t search_l = 8;
  std::string witness;
  std::int64_t depth = 200;
  std::string name;

  auto* analyze = app.add_subcommand("analyze", "Certified bounds for the series described by a spec file");
  analyze->add_option("spec", spec_path, "Problem spec file")->required();
  auto* n_check_opt = analyze->add_option("--n-check", n_check, "Levels checked for agreement")->capture_default_str();
  auto* witness_opt = analyze->add_option("--witness", witness, "Repetition witness U,V,omega");
  auto* k_opt = analyze->add_option("--search-k", search_k, "Largest |U| in the witness search")->capture_default_str();
  auto* l_opt = analyze->add_option("--search-l", search_l, "Largest |V| in the witness search")->capture_default_str();
  witness_opt->excludes(k_opt)->excludes(l_opt);
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto* repro = app.add_subcommand("reproduce", "Run a bundled example and compare with expected values");
  repro->add_option("name", name, "ex1, ex2, ex3, ex4, thue-morse or mahler")
      ->required()
      ->check(CLI::IsMember({"ex1", "ex2", "ex3", "ex4", "thue-morse", "mahler"}));

  auto* verify = app.add_subcommand("verify-equation", "Check the spec's algebraic equation on the series");
  verify->add_option("spec", spec_path, "Problem spec file")->required();
  auto* depth_opt = verify->add_option("--depth", depth, "Last coefficient index checked")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kSpecError;
  }

  try {
    if (analyze->parsed()) {
      laurexp::ProblemSpec spec = laurexp::load_spec(spec_path);
      laurexp::AnalyzeOptions options;
      if (*n_check_opt) options.n_check = n_check;
      if (*k_opt) options.search_k = search_k;
      if (*l_opt) options.search_l = search_l;
      if (*witness_opt) options.witness = laurexp::parse_witness_flag(witness);
      const laurexp::Report report = laurexp::analyze(spec, options);
      std::cout << (format == "json" ? laurexp::to_json(report) : laurexp::to_text(report));
      return kOk;
    }
    if (repro->parsed()) {
      const laurexp::Reproduction r = laurexp::reproduce(name);
      std::cout << laurexp::to_text(r);
      return r.ok() ? kOk : kMismatch;
    }
    if (verify->parsed()) {
      const laurexp::ProblemSpec spec = laurexp::load_spec(spec_path);
      const laurexp::EquationCheck check = laurexp::verify_equation(spec, *depth_opt ? depth : spec.depth);
      std::cout << laurexp::to_text(check);
      return kOk;
    }
  } catch (const laurexp::SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kSpecError;
  } catch (const laurexp::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kSpecError;
  }
  return kOk;
}
