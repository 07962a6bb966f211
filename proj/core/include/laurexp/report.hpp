#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laurexp/automata.hpp"
#include "laurexp/bounds.hpp"
#include "laurexp/repetition.hpp"
#include "laurexp/spec_file.hpp"
#include "laurexp/wordpoly.hpp"

namespace laurexp {

/// Command-line overrides of the spec's options.
struct AnalyzeOptions {
  std::optional<std::uint32_t> n_check;
  std::optional<std::size_t> search_k;
  std::optional<std::size_t> search_l;
  std::optional<RepetitionWitness> witness;
  std::optional<std::int64_t> depth;
};

/// "U,V,omega" with digit-string words, e.g. ",0,3" or "0,1,2".
RepetitionWitness parse_witness_flag(const std::string& text);

struct EquationCheck {
  std::int64_t depth = 0;
  bool consistent = false;
  std::optional<std::int64_t> first_offending_index;
  std::int64_t terms_used = 0;
  std::size_t degree = 0;  // highest power of X with a nonzero coefficient
  std::vector<Polynomial> coefficients;
};

struct Report {
  ProblemSpec spec{};
  FieldRef field{};
  std::size_t automaton_states = 0;  // before minimization
  MinimizedDfao minimal;
  KernelDescriptor kernel{};
  RepetitionWitness witness{};
  RepetitionWitness pigeonhole{};
  std::vector<AgreementRecord> agreement{};
  bool exact_agreement = false;
  CoprimalityCertificate coprimality{};
  BoundReport general{};
  BoundReport theorem{};
  BoundReport refined{};
  /// The refined interval before coprimality is taken into account (present
  /// when agreement is exact).
  std::optional<BoundReport> refined_without_coprimality{};
  std::optional<Rational> exact{};
  std::vector<std::string> assumptions{};
  std::optional<EquationCheck> equation{};
  std::optional<BoundReport> liouville_mahler{};

  std::size_t s() const { return kernel.size(); }
  std::size_t e() const { return minimal.state_count; }
};

/// Full pipeline: automaton, kernel, witness, agreement, coprimality, bounds,
/// and the equation check when the spec carries one. Throws SpecError for
/// invalid input and BudgetExceeded when a limit is hit.
Report analyze(const ProblemSpec& spec, const AnalyzeOptions& options = {});

/// Checks the spec's equation against the coded fixed point to `depth`.
/// Throws SpecError when the spec has no equation.
EquationCheck verify_equation(const ProblemSpec& spec, std::int64_t depth);

/// Deterministic structured report with top-level keys spec, kernel, automaton,
/// witness, agreement, coprimality, bounds, assumptions, equation.
std::string to_json(const Report& report);
std::string to_text(const Report& report);
std::string to_text(const EquationCheck& check);

/// "14/5 (≈ 2.800000)".
std::string format_bound(const Rational& r);

}  // namespace laurexp
