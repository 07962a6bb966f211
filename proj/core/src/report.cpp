#include "laurexp/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "laurexp/errors.hpp"
#include "laurexp/series.hpp"
#include "laurexp/unity.hpp"

namespace laurexp {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string word_text(const Word& w) { return w.empty() ? "ε" : format_word(w); }

std::vector<Polynomial> equation_polys(const FieldRef& field, const ProblemSpec& spec) {
  std::vector<Polynomial> out;
  for (const auto& c : *spec.equation) out.push_back(Polynomial::from_ints(field, c));
  return out;
}

RepetitionWitness choose_witness(const ProblemSpec& spec, const AnalyzeOptions& options,
                                 SequenceStream& stream, const RepetitionWitness& pigeonhole,
                                 std::vector<std::string>& assumptions) {
  if (options.witness) return *options.witness;
  if (spec.witness_u) {
    RepetitionWitness w;
    w.U = *spec.witness_u;
    w.V = *spec.witness_v;
    w.omega = *spec.witness_omega;
    w.mode = WitnessMode::supplied;
    return w;
  }
  if (spec.witness_source == WitnessSource::pigeonhole) return pigeonhole;
  SearchOptions so;
  so.max_k = options.search_k.value_or(spec.search_k);
  so.max_l = options.search_l.value_or(spec.search_l);
  so.n_check = options.n_check.value_or(spec.n_check);
  try {
    return search_witness(stream, so);
  } catch (const NoWitness& e) {
    assumptions.push_back(std::string("witness search failed (") + e.what() + "); pigeonhole witness used");
    return pigeonhole;
  }
}

}  // namespace

RepetitionWitness parse_witness_flag(const std::string& text) {
  const auto c1 = text.find(',');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(',', c1 + 1);
  if (c2 == std::string::npos || text.find(',', c2 + 1) != std::string::npos)
    throw SpecError(0, "--witness expects U,V,omega");
  RepetitionWitness w;
  try {
    w.U = parse_word(text.substr(0, c1));
    w.V = parse_word(text.substr(c1 + 1, c2 - c1 - 1));
    w.omega = parse_rational(text.substr(c2 + 1));
  } catch (const std::invalid_argument& e) {
    throw SpecError(0, std::string("--witness: ") + e.what());
  }
  if (w.V.empty()) throw SpecError(0, "--witness: V must be nonempty");
  if (w.omega <= 1) throw SpecError(0, "--witness: omega must exceed 1");
  w.mode = WitnessMode::supplied;
  return w;
}

EquationCheck verify_equation(const ProblemSpec& spec, std::int64_t depth) {
  if (!spec.equation) throw SpecError(0, "spec has no equation");
  if (depth < 0) throw SpecError(0, "depth must be nonnegative");
  const FieldRef field = Field::prime(spec.p);
  SequenceStream stream(UniformMorphism(spec.m, spec.images), Coding::from_ints(field, spec.coding), spec.seed);

  EquationCheck check;
  check.depth = depth;
  check.coefficients = equation_polys(field, spec);
  std::int64_t slack = 8;
  for (std::size_t i = 0; i < check.coefficients.size(); ++i) {
    if (check.coefficients[i].is_zero()) continue;
    check.degree = i;
    slack += std::max<std::int64_t>(0, check.coefficients[i].degree());
  }
  if (check.degree == 0) throw SpecError(spec.line_of("equation"), "equation has no term in X");

  std::int64_t terms = depth + 1 + slack;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const auto f = LaurentSeries::from_sequence(field, stream.prefix(static_cast<std::size_t>(terms)));
    try {
      const AlgebraicVerdict v = verify_algebraic(f, check.coefficients, depth);
      check.consistent = v.consistent;
      check.first_offending_index = v.first_offending_index;
      check.terms_used = terms;
      return check;
    } catch (const InsufficientPrecision& e) {
      terms = std::max(terms + 1, e.required());
    }
  }
  throw BudgetExceeded("equation check could not reach depth " + std::to_string(depth));
}

Report analyze(const ProblemSpec& spec, const AnalyzeOptions& options) {
  const FieldRef field = Field::prime(spec.p);
  const UniformMorphism sigma(spec.m, spec.images);
  const Coding coding = Coding::from_ints(field, spec.coding);
  SequenceStream stream(sigma, coding, spec.seed);

  const Dfao dfao = build_dfao(sigma, coding, spec.seed);
  Report r{.spec = spec, .field = field, .automaton_states = dfao.state_count(), .minimal = minimize(dfao)};
  r.kernel = kernel(r.minimal.automaton);
  const std::uint64_t b = sigma.base();

  r.pigeonhole = pigeonhole_witness(sigma, spec.seed, r.e());
  r.witness = choose_witness(spec, options, stream, r.pigeonhole, r.assumptions);
  for (const Letter c : r.witness.U)
    if (c >= spec.m) throw SpecError(spec.line_of("witness_u"), "witness letter outside the alphabet");
  for (const Letter c : r.witness.V)
    if (c >= spec.m) throw SpecError(spec.line_of("witness_v"), "witness letter outside the alphabet");

  const std::uint32_t n_check = options.n_check.value_or(spec.n_check);
  for (std::uint32_t n = 0; n <= n_check; ++n)
    r.agreement.push_back(measure_agreement(stream, r.witness, n, default_budget(r.witness, b, n)));
  const AgreementRecord& level0 = r.agreement.front();
  if (level0.measured && Rational(*level0.measured) < level0.expected)
    throw SpecError(spec.line_of("witness_omega"), "U V^omega is not a prefix of the sequence (first mismatch at " +
                                                       std::to_string(*level0.measured) + ")");
  r.exact_agreement = std::all_of(r.agreement.begin(), r.agreement.end(),
                                  [](const AgreementRecord& a) { return a.exact_match; });

  const UnityRootPlan plan = unity_root_plan(r.witness.ell(), field, b);
  r.coprimality = coprimality_check(sigma, coding, r.witness, plan);
  const bool coprime = r.coprimality.verdict != CoprimeVerdict::fails_at;

  r.general = general_bound(b, r.s(), r.e());
  r.theorem = witness_bounds(r.witness.k(), r.witness.ell(), r.witness.omega, b, r.s(), false, false);
  r.refined = witness_bounds(r.witness.k(), r.witness.ell(), r.witness.omega, b, r.s(), r.exact_agreement,
                             r.exact_agreement && coprime);
  if (r.exact_agreement)
    r.refined_without_coprimality =
        witness_bounds(r.witness.k(), r.witness.ell(), r.witness.omega, b, r.s(), true, false);
  r.exact = r.refined.exact;

  r.assumptions.push_back("s is the base-" + std::to_string(b) + " kernel size");
  r.assumptions.push_back("witness mode: " + to_string(r.witness.mode));
  if (r.witness.mode == WitnessMode::pigeonhole)
    r.assumptions.push_back("agreement lower bound holds for all n");
  else
    r.assumptions.push_back("agreement verified for n <= " + std::to_string(n_check) + " only");
  if (r.exact_agreement)
    r.assumptions.push_back("exact agreement verified for n <= " + std::to_string(n_check) + " only");
  r.assumptions.push_back("coprimality verdict covers n >= 1: " + to_string(r.coprimality.verdict) +
                          (r.coprimality.verdict == CoprimeVerdict::all_n
                               ? std::string()
                               : " " + std::to_string(r.coprimality.level)));
  if (r.exact) r.assumptions.push_back("exact value is empirically exact");

  if (spec.equation) {
    r.equation = verify_equation(spec, options.depth.value_or(spec.depth));
    if (r.equation->consistent) {
      r.liouville_mahler = liouville_mahler_bound(r.equation->degree);
      r.liouville_mahler->assumptions.push_back("equation verified to depth " + std::to_string(r.equation->depth) +
                                                " only");
    }
  }
  return r;
}

std::string format_bound(const Rational& r) { return to_string(r) + " (≈ " + to_decimal(r) + ")"; }

namespace {

ordered_json rational_json(const std::optional<Rational>& r) {
  if (!r) return nullptr;
  return to_string(*r);
}

ordered_json bound_json(const BoundReport& b) {
  ordered_json j;
  j["lower"] = rational_json(b.lower);
  j["lower_decimal"] = b.lower ? ordered_json(to_decimal(*b.lower)) : ordered_json(nullptr);
  j["upper"] = to_string(b.upper);
  j["upper_decimal"] = to_decimal(b.upper);
  j["exact"] = rational_json(b.exact);
  j["provenance"] = b.provenance;
  j["assumptions"] = b.assumptions;
  return j;
}

ordered_json witness_json(const RepetitionWitness& w) {
  ordered_json j;
  j["mode"] = to_string(w.mode);
  j["U"] = format_word(w.U);
  j["V"] = format_word(w.V);
  j["k"] = w.k();
  j["l"] = w.ell();
  j["omega"] = to_string(w.omega);
  return j;
}

std::vector<std::string> values_text(const Field& F, const std::vector<FieldElement>& v) {
  std::vector<std::string> out;
  for (const auto x : v) out.push_back(F.format(x));
  return out;
}

std::vector<std::string> residues_text(const std::vector<Polynomial>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

std::string to_json(const Report& r) {
  const Field& F = *r.field;
  ordered_json j;

  ordered_json spec;
  spec["name"] = r.spec.name;
  spec["p"] = r.spec.p;
  spec["b"] = r.spec.b;
  spec["m"] = r.spec.m;
  std::vector<std::string> images;
  for (const auto& w : r.spec.images) images.push_back(format_word(w));
  spec["images"] = images;
  spec["coding"] = r.spec.coding;
  spec["seed"] = r.spec.seed;
  j["spec"] = spec;

  ordered_json kernel;
  kernel["s"] = r.s();
  kernel["base"] = r.spec.b;
  kernel["elements"] = ordered_json::array();
  for (const auto& el : r.kernel.elements)
    kernel["elements"].push_back(
        {{"level", el.level}, {"residue", el.residue}, {"values", values_text(F, el.values)}});
  j["kernel"] = kernel;

  ordered_json automaton;
  automaton["e"] = r.e();
  automaton["states_before_minimization"] = r.automaton_states;
  automaton["transitions"] = r.minimal.automaton.transitions();
  automaton["outputs"] = values_text(F, r.minimal.automaton.outputs());
  j["automaton"] = automaton;

  ordered_json witness = witness_json(r.witness);
  witness["pigeonhole"] = witness_json(r.pigeonhole);
  j["witness"] = witness;

  ordered_json agreement = ordered_json::array();
  for (const auto& a : r.agreement)
    agreement.push_back({{"n", a.level},
                         {"expected", to_string(a.expected)},
                         {"measured", a.measured ? ordered_json(*a.measured) : ordered_json(nullptr)},
                         {"exact", a.exact_match}});
  j["agreement"] = agreement;

  const auto& c = r.coprimality;
  ordered_json cop;
  cop["verdict"] = to_string(c.verdict);
  cop["level"] = c.level;
  cop["scope"] = "n >= 1";
  cop["plan"] = {{"l", c.plan.period},
                 {"l_prime", c.plan.coprime_part},
                 {"p_valuation", c.plan.p_valuation},
                 {"t", c.plan.base_order}};
  cop["factors"] = ordered_json::array();
  for (const auto& f : c.factors)
    cop["factors"].push_back({{"factor", f.factor.to_string()},
                              {"t", f.order},
                              {"preperiod", f.preperiod},
                              {"period", f.period},
                              {"values", residues_text(f.values)},
                              {"never_zero", f.never_zero()},
                              {"matrix_preperiod", f.matrix_preperiod},
                              {"matrix_period", f.matrix_period}});
  if (c.last_letters)
    cop["last_letters"] = {{"preperiod", c.last_letters->preperiod},
                           {"period", c.last_letters->period},
                           {"u_values", values_text(F, c.last_letters->u_values)},
                           {"v_values", values_text(F, c.last_letters->v_values)}};
  else
    cop["last_letters"] = nullptr;
  j["coprimality"] = cop;

  ordered_json bounds;
  bounds["general"] = bound_json(r.general);
  bounds["theorem"] = bound_json(r.theorem);
  ordered_json refined = bound_json(r.refined);
  refined["without_coprimality"] =
      r.refined_without_coprimality ? bound_json(*r.refined_without_coprimality) : ordered_json(nullptr);
  bounds["refined"] = refined;
  bounds["exact"] = rational_json(r.exact);
  j["bounds"] = bounds;

  j["assumptions"] = r.assumptions;

  if (r.equation) {
    const auto& e = *r.equation;
    j["equation"] = {{"coefficients", residues_text(e.coefficients)},
                     {"depth", e.depth},
                     {"consistent", e.consistent},
                     {"first_offending_index",
                      e.first_offending_index ? ordered_json(*e.first_offending_index) : ordered_json(nullptr)},
                     {"terms_used", e.terms_used},
                     {"degree", e.degree},
                     {"liouville_mahler", r.liouville_mahler ? bound_json(*r.liouville_mahler) : ordered_json(nullptr)}};
  } else {
    j["equation"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string to_text(const EquationCheck& e) {
  std::ostringstream os;
  os << "equation: sum_i c_i X^i with c = [" << join(residues_text(e.coefficients)) << "]\n";
  if (e.consistent)
    os << "  consistent to depth " << e.depth << " (" << e.terms_used << " terms)\n";
  else
    os << "  inconsistent at index " << *e.first_offending_index << " (depth " << e.depth << ")\n";
  return os.str();
}

std::string to_text(const Report& r) {
  const Field& F = *r.field;
  std::ostringstream os;
  os << "laurexp report" << (r.spec.name.empty() ? "" : ": " + r.spec.name) << "\n";
  os << "  F_" << r.spec.p << ", b = " << r.spec.b << ", m = " << r.spec.m << ", seed " << r.spec.seed << "\n";
  for (std::size_t i = 0; i < r.spec.images.size(); ++i)
    os << "  " << i << " -> " << format_word(r.spec.images[i]) << "  (coded " << F.format(F.from_int(r.spec.coding[i]))
       << ")\n";

  os << "kernel: s = " << r.s() << "\n";
  for (const auto& el : r.kernel.elements)
    os << "  (a_{" << r.spec.b << "^" << el.level << " i + " << el.residue << "}) on states: ["
       << join(values_text(F, el.values)) << "]\n";
  os << "automaton: e = " << r.e() << " (" << r.automaton_states << " states before minimization)\n";

  const auto& w = r.witness;
  os << "witness (" << to_string(w.mode) << "): U = " << word_text(w.U) << ", V = " << word_text(w.V)
     << ", k = " << w.k() << ", l = " << w.ell() << ", omega = " << to_string(w.omega) << "\n";
  os << "  pigeonhole: U = " << word_text(r.pigeonhole.U) << ", V = " << word_text(r.pigeonhole.V)
     << ", omega = " << to_string(r.pigeonhole.omega) << "\n";

  os << "agreement:\n";
  for (const auto& a : r.agreement)
    os << "  n = " << a.level << ": expected " << to_string(a.expected) << ", measured "
       << (a.measured ? std::to_string(*a.measured) : std::string("none within budget"))
       << (a.exact_match ? " (exact)" : "") << "\n";

  const auto& c = r.coprimality;
  os << "coprimality (n >= 1): " << to_string(c.verdict);
  if (c.verdict != CoprimeVerdict::all_n) os << " " << c.level;
  os << "\n";
  for (const auto& f : c.factors)
    os << "  mod " << f.factor.to_string() << ": t = " << f.order << ", preperiod " << f.preperiod << ", period "
       << f.period << ", values [" << join(residues_text(f.values)) << "], matrix period " << f.matrix_period
       << "\n";
  if (c.last_letters)
    os << "  last letters: U [" << join(values_text(F, c.last_letters->u_values)) << "], V ["
       << join(values_text(F, c.last_letters->v_values)) << "], preperiod " << c.last_letters->preperiod
       << ", period " << c.last_letters->period << "\n";

  os << "bounds:\n";
  os << "  general (" << r.general.provenance << "): mu <= " << format_bound(r.general.upper) << "\n";
  auto interval = [&](const char* label, const BoundReport& b) {
    os << "  " << label << " (" << b.provenance << "): " << format_bound(*b.lower)
       << " <= mu <= " << format_bound(b.upper) << "\n";
  };
  interval("theorem", r.theorem);
  if (r.refined_without_coprimality) interval("refined, before coprimality", *r.refined_without_coprimality);
  interval("refined", r.refined);
  if (r.exact)
    os << "  exact: mu = " << format_bound(*r.exact) << "\n";
  else
    os << "  exact: not certified\n";
  if (r.liouville_mahler)
    os << "  " << r.liouville_mahler->provenance << ": mu <= " << format_bound(r.liouville_mahler->upper) << "\n";

  os << "assumptions:\n";
  for (const auto& a : r.assumptions) os << "  - " << a << "\n";
  if (r.equation) os << to_text(*r.equation);
  return os.str();
}

}  // namespace laurexp
