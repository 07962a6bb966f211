#include "laurexp/fixtures.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "laurexp/errors.hpp"

namespace laurexp {

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
#include "fixtures_data.inc"
  };
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw SpecError(0, "unknown fixture '" + name + "' (expected ex1, ex2, ex3, ex4, thue-morse or mahler)");
}

bool Reproduction::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReproductionCheck& c) { return c.ok; });
}

namespace {

class Checker {
 public:
  explicit Checker(std::vector<ReproductionCheck>& out) : out_(out) {}

  void equal(const std::string& what, const std::string& expected, const std::string& actual) {
    out_.push_back({what, expected, actual, expected == actual});
  }
  void equal(const std::string& what, const Rational& expected, const std::optional<Rational>& actual) {
    equal(what, to_string(expected), actual ? to_string(*actual) : std::string("none"));
  }
  void truth(const std::string& what, bool value) { out_.push_back({what, "true", value ? "true" : "false", value}); }

 private:
  std::vector<ReproductionCheck>& out_;
};

std::string matrix_text(const PolyMatrix& m) { return m.to_string(); }

PolyMatrix int_matrix(const FieldRef& field, const std::vector<std::vector<std::int64_t>>& rows) {
  PolyMatrix out(field, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      out.at(i, j) = Polynomial::from_ints(field, {rows[i][j]});
  return out;
}

std::string residues(const PeriodicityCertificate& c) {
  std::string s;
  for (std::size_t i = 0; i < c.values.size(); ++i) s += (i ? "," : "") + c.values[i].to_string();
  return s + " (preperiod " + std::to_string(c.preperiod) + ", period " + std::to_string(c.period) + ")";
}

const PeriodicityCertificate* factor_cert(const Report& r, const Polynomial& h) {
  for (const auto& f : r.coprimality.factors)
    if (f.factor == h) return &f;
  return nullptr;
}

std::string interval(const std::optional<BoundReport>& b) {
  if (!b || !b->lower) return "none";
  return "[" + to_string(*b->lower) + ", " + to_string(b->upper) + "]";
}

std::string witness_text(const RepetitionWitness& w) {
  return "U=" + format_word(w.U) + " V=" + format_word(w.V) + " omega=" + to_string(w.omega);
}

bool all_exact(const Report& r) {
  return !r.agreement.empty() && r.exact_agreement;
}

void check_ex1(const Report& r, Checker& c, std::vector<std::string>& notes) {
  const FieldRef& F = r.field;
  c.equal("e", "2", std::to_string(r.e()));

  // The listed kernel {(a_i), (a_4i), (a_16i), (0), (1)}, compared as sets of sequences.
  SequenceStream stream(UniformMorphism(r.spec.m, r.spec.images), Coding::from_ints(F, r.spec.coding), r.spec.seed);
  const std::size_t N = 256;
  std::set<std::vector<std::uint32_t>> listed;
  for (const std::size_t step : {1u, 4u, 16u}) {
    std::vector<std::uint32_t> seq;
    for (std::size_t i = 0; i < N; ++i) seq.push_back(stream.term(step * i).code);
    listed.insert(seq);
  }
  listed.insert(std::vector<std::uint32_t>(N, 0));
  listed.insert(std::vector<std::uint32_t>(N, 1));
  std::set<std::vector<std::uint32_t>> computed;
  for (const auto& el : r.kernel.elements) {
    std::vector<std::uint32_t> seq;
    for (std::size_t i = 0; i < N; ++i) seq.push_back(el.values[r.minimal.automaton.run(i)].code);
    computed.insert(seq);
  }
  c.truth("kernel equals the listed subsequences as a set", listed == computed);
  notes.push_back("the listed kernel has 5 entries but (a_i) = (a_4i) = (a_16i), so s = " + std::to_string(r.s()));

  c.equal("witness", "U= V=0 omega=3", witness_text(r.witness));
  c.truth("agreement exactly 3*4^n at every checked level", all_exact(r));
  c.equal("coprimality", "coprime-for-all-n", to_string(r.coprimality.verdict));
  c.equal("interval before coprimality", "[3, 6]", interval(r.refined_without_coprimality));
  c.equal("exact", Rational(3), r.exact);
  c.truth("equation X^4 + X + T/(T^4+1) consistent", r.equation && r.equation->consistent);
}

void check_ex2(const Report& r, Checker& c) {
  const FieldRef& F = r.field;
  c.equal("witness", "U= V=0 omega=5", witness_text(r.witness));
  c.equal("interval before coprimality", "[5, 10]", interval(r.refined_without_coprimality));
  c.equal("exact", Rational(5), r.exact);
  const PolyMatrix M1 = morphism_matrix(F, UniformMorphism(r.spec.m, r.spec.images)).evaluate(F->one());
  const PolyMatrix odd = int_matrix(F, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  const PolyMatrix even = int_matrix(F, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  c.equal("M(1)", matrix_text(odd), matrix_text(M1));
  bool powers = true;
  for (std::uint64_t j = 1; j <= 5; ++j)
    powers = powers && matrix_power(M1, 2 * j) == even && matrix_power(M1, 2 * j + 1) == odd;
  c.truth("M(1)^{2j}, M(1)^{2j+1} match for j = 1..5", powers);
  bool scalar = true;
  const PolyMatrix row = int_matrix(F, {{1, 0, 0}});
  const PolyMatrix col = int_matrix(F, {{1}, {0}, {1}});
  for (std::uint64_t n = 1; n <= 20; ++n)
    scalar = scalar && (row * matrix_power(M1, n) * col).at(0, 0) == Polynomial::from_ints(F, {1});
  c.truth("(1,0,0) M(1)^n (1,0,1)^T = 1 for n = 1..20", scalar);
}

void check_ex3(const Report& r, Checker& c) {
  const FieldRef& F = r.field;
  c.equal("witness", "U= V=010102 omega=8/3", witness_text(r.witness));
  c.equal("interval before coprimality", "[8/3, 24/5]", interval(r.refined_without_coprimality));
  c.equal("interval", "[8/3, 14/5]", interval(r.refined));
  c.equal("exact", "none", r.exact ? to_string(*r.exact) : "none");
  const auto* plus = factor_cert(r, Polynomial::from_ints(F, {-1, 1}));
  const auto* minus = factor_cert(r, Polynomial::from_ints(F, {1, 1}));
  c.equal("values mod T-1", "1,2 (preperiod 0, period 2)", plus ? residues(*plus) : "missing");
  c.equal("values mod T+1", "1 (preperiod 0, period 1)", minus ? residues(*minus) : "missing");
}

void check_ex4(const Report& r, Checker& c) {
  const FieldRef& F = r.field;
  c.equal("witness", "U= V=00043 omega=17/5", witness_text(r.witness));
  c.equal("interval before coprimality", "[17/5, 85/12]", interval(r.refined_without_coprimality));
  c.equal("exact", Rational(17, 5), r.exact);
  const auto* one = factor_cert(r, Polynomial::from_ints(F, {-1, 1}));
  c.equal("values mod T-1", "2,1,3,4 (preperiod 0, period 4)", one ? residues(*one) : "missing");
  c.equal("matrix period", "20", one ? std::to_string(one->matrix_period) : "missing");
  const PolyMatrix M1 = morphism_matrix(F, UniformMorphism(r.spec.m, r.spec.images)).evaluate(F->one());
  const PolyMatrix shown =
      int_matrix(F, {{3, 0, 0, 1, 1}, {1, 1, 1, 1, 1}, {1, 2, 1, 0, 1}, {0, 2, 1, 1, 1}, {2, 1, 0, 0, 2}});
  c.equal("M(1)", matrix_text(shown), matrix_text(M1));
}

void check_thue_morse(const Report& r, Checker& c, std::vector<std::string>& notes) {
  c.equal("e", "2", std::to_string(r.e()));
  c.equal("s", "2", std::to_string(r.s()));
  c.equal("general upper bound", "16", to_string(r.general.upper));
  c.truth("equation (T+1)^3 f^2 + T(T+1) f + 1 consistent", r.equation && r.equation->consistent);

  ProblemSpec alt = r.spec;
  alt.equation = std::vector<std::vector<std::int64_t>>{{0, 0, 1}, {0, 1, 0, 1}, {1, 1, 1, 1}};
  const EquationCheck eq = verify_equation(alt, r.spec.depth);
  notes.push_back(std::string("(T+1)^3 f^2 + T(T+1)^2 f + T^2 is ") +
                  (eq.consistent ? "consistent" : "inconsistent") + " to depth " + std::to_string(eq.depth));
}

void check_mahler(const Report& r, Checker& c) {
  c.equal("witness", "U=0 V=1 omega=2", witness_text(r.witness));
  c.equal("witness mode", "pigeonhole", to_string(r.witness.mode));
  c.truth("equation f^2 - f + 1/T consistent", r.equation && r.equation->consistent);
  c.equal("Liouville-Mahler upper bound", "2", r.liouville_mahler ? to_string(r.liouville_mahler->upper) : "none");
}

}  // namespace

Reproduction reproduce(const std::string& name) {
  const Fixture& f = fixture(name);
  Reproduction out{analyze(parse_spec(f.text)), {}, {}};
  Checker c(out.checks);
  if (name == "ex1") check_ex1(out.report, c, out.notes);
  else if (name == "ex2") check_ex2(out.report, c);
  else if (name == "ex3") check_ex3(out.report, c);
  else if (name == "ex4") check_ex4(out.report, c);
  else if (name == "thue-morse") check_thue_morse(out.report, c, out.notes);
  else if (name == "mahler") check_mahler(out.report, c);
  return out;
}

std::string to_text(const Reproduction& r) {
  std::ostringstream os;
  os << to_text(r.report);
  os << "reproduction checks:\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.ok ? "ok" : "MISMATCH") << "] " << c.what;
    if (c.ok) os << ": " << c.actual << "\n";
    else os << ": expected " << c.expected << ", got " << c.actual << "\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  os << "reproduction: " << (r.ok() ? "ok" : "mismatch") << "\n";
  return os.str();
}

}  // namespace laurexp
