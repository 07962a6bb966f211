#include "laurexp/wordpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "laurexp/errors.hpp"

namespace laurexp {

Polynomial word_poly(const FieldRef& field, const CodedWord& w) {
  std::vector<FieldElement> c(w.rbegin(), w.rend());
  return Polynomial(field, std::move(c));
}

OccurrenceVector occurrence_vector(const FieldRef& field, const Word& w, std::size_t alphabet_size) {
  std::vector<std::vector<FieldElement>> coeffs(alphabet_size);
  const std::size_t len = w.size();
  for (std::size_t idx = 0; idx < len; ++idx) {
    const Letter c = w[idx];
    if (c >= alphabet_size) throw std::invalid_argument("letter out of range in occurrence_vector");
    const std::size_t pos = len - 1 - idx;
    auto& row = coeffs[c];
    if (row.size() <= pos) row.resize(pos + 1, field->zero());
    row[pos] = field->one();
  }
  OccurrenceVector out;
  out.reserve(alphabet_size);
  for (auto& c : coeffs) out.emplace_back(field, std::move(c));
  return out;
}

PolyMatrix::PolyMatrix(FieldRef field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(field_)) {}

PolyMatrix PolyMatrix::identity(FieldRef field, std::size_t n) {
  PolyMatrix out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = Polynomial::constant(field, field->one());
  return out;
}

PolyMatrix PolyMatrix::column(FieldRef field, const std::vector<Polynomial>& entries) {
  PolyMatrix out(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) out.at(i, 0) = entries[i];
  return out;
}

PolyMatrix PolyMatrix::compose_power(std::size_t k) const {
  PolyMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].compose_power(k);
  return out;
}

PolyMatrix PolyMatrix::evaluate(FieldElement c) const {
  PolyMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = Polynomial::constant(field_, entries_[i].eval(c));
  return out;
}

PolyMatrix PolyMatrix::evaluate(const QuotientRing& ring, const Polynomial& x) const {
  PolyMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = ring.evaluate(entries_[i], x);
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not match");
  if (!(*a.field_ == *b.field_)) throw std::invalid_argument("matrices over different fields");
  PolyMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial acc(a.field_);
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const Polynomial& x = a.at(i, l);
        const Polynomial& y = b.at(l, j);
        if (!x.is_zero() && !y.is_zero()) acc += x * y;
      }
      out.at(i, j) = std::move(acc);
    }
  return out;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

PolyMatrix multiply(const QuotientRing& ring, const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out = a * b;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out.at(i, j) = ring.reduce(out.at(i, j));
  return out;
}

PolyMatrix matrix_power(const QuotientRing& ring, PolyMatrix a, std::uint64_t e) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix power needs a square matrix");
  PolyMatrix acc = PolyMatrix::identity(a.field(), a.rows());
  while (e) {
    if (e & 1) acc = multiply(ring, acc, a);
    e >>= 1;
    if (e) a = multiply(ring, a, a);
  }
  return acc;
}

PolyMatrix matrix_power(PolyMatrix a, std::uint64_t e) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix power needs a square matrix");
  PolyMatrix acc = PolyMatrix::identity(a.field(), a.rows());
  while (e) {
    if (e & 1) acc = acc * a;
    e >>= 1;
    if (e) a = a * a;
  }
  return acc;
}

PolyMatrix morphism_matrix(const FieldRef& field, std::size_t alphabet_size,
                           const std::vector<Word>& images) {
  if (images.size() != alphabet_size)
    throw std::invalid_argument("need one image per letter");
  PolyMatrix out(field, alphabet_size, alphabet_size);
  for (std::size_t i = 0; i < alphabet_size; ++i) {
    const auto row = occurrence_vector(field, images[i], alphabet_size);
    for (std::size_t j = 0; j < alphabet_size; ++j) out.at(i, j) = row[j];
  }
  return out;
}

PolyMatrix morphism_matrix(const FieldRef& field, const UniformMorphism& sigma) {
  return morphism_matrix(field, sigma.alphabet_size(), sigma.images());
}

namespace {

PolyMatrix coding_column(const Coding& coding) {
  std::vector<Polynomial> col;
  col.reserve(coding.size());
  for (const auto c : coding.table()) col.push_back(Polynomial::constant(coding.field(), c));
  return PolyMatrix::column(coding.field(), col);
}

}  // namespace

std::vector<Polynomial> r_vector(const UniformMorphism& sigma, const Coding& coding, std::size_t n) {
  const PolyMatrix M = morphism_matrix(coding.field(), sigma);
  PolyMatrix R = coding_column(coding);
  std::size_t power = 1;
  for (std::size_t j = 0; j < n; ++j) {
    R = M.compose_power(power) * R;
    power *= sigma.base();
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < R.rows(); ++i) out.push_back(R.at(i, 0));
  return out;
}

std::uint64_t frobenius_order(const QuotientRing& ring, std::uint64_t base, std::uint64_t cap) {
  const Polynomial x = ring.generator();
  Polynomial y = x;
  for (std::uint64_t t = 1; t <= cap; ++t) {
    y = ring.pow(y, base);
    if (y == x) return t;
  }
  throw BudgetExceeded("no t with x^(b^t) = x found below the cap");
}

IterateEvaluator::IterateEvaluator(const UniformMorphism& sigma, const Coding& coding, Polynomial h)
    : m_(sigma.alphabet_size()),
      b_(sigma.base()),
      ring_(std::move(h)),
      t_(frobenius_order(ring_, b_)),
      base_matrix_(morphism_matrix(coding.field(), sigma)),
      cycle_(coding.field(), 0, 0),
      coding_column_(coding_column(coding)) {
  if (coding.size() != m_) throw std::invalid_argument("coding size differs from alphabet size");
  x_powers_.push_back(ring_.generator());
  for (std::uint64_t r = 1; r < t_; ++r) x_powers_.push_back(ring_.pow(x_powers_.back(), b_));
  partial_.push_back(PolyMatrix::identity(coding.field(), m_));
  for (std::uint64_t r = 0; r < t_; ++r)
    partial_.push_back(multiply(ring_, base_matrix_.evaluate(ring_, x_powers_[r]), partial_.back()));
  cycle_ = partial_.back();
}

PolyMatrix IterateEvaluator::iterate_matrix(std::uint64_t n) const {
  return multiply(ring_, partial_[n % t_], matrix_power(ring_, cycle_, n / t_));
}

Polynomial IterateEvaluator::value(const Word& w, std::uint64_t n) const {
  return value(w, n, iterate_matrix(n));
}

Polynomial IterateEvaluator::value(const Word& w, std::uint64_t n, const PolyMatrix& iterate) const {
  const auto v = occurrence_vector(ring_.field(), w, m_);
  const Polynomial& x = x_powers_[n % t_];
  PolyMatrix row(ring_.field(), 1, m_);
  for (std::size_t j = 0; j < m_; ++j) row.at(0, j) = ring_.evaluate(v[j], x);
  return multiply(ring_, multiply(ring_, row, iterate), coding_column_).at(0, 0);
}

Polynomial iterate_value(const UniformMorphism& sigma, const Coding& coding, const Word& w,
                         std::uint64_t n, const Polynomial& h) {
  return IterateEvaluator(sigma, coding, h).value(w, n);
}

const Polynomial& PeriodicityCertificate::value_at(std::uint64_t n) const {
  if (n < values.size()) return values[n];
  return values[preperiod + (n - preperiod) % period];
}

bool PeriodicityCertificate::never_zero() const { return !first_zero().has_value(); }

std::optional<std::uint64_t> PeriodicityCertificate::first_zero() const {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i].is_zero()) return i;
  return std::nullopt;
}

PeriodicityCertificate periodicity_certificate(const UniformMorphism& sigma, const Coding& coding,
                                               const Word& w, const Polynomial& h,
                                               std::uint64_t max_powers) {
  const IterateEvaluator ev(sigma, coding, h);
  const QuotientRing& ring = ev.ring();
  const std::uint64_t t = ev.order();

  auto key_of = [&](const PolyMatrix& a) {
    std::vector<std::uint32_t> key;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto part = ring.key(a.at(i, j));
        key.insert(key.end(), part.begin(), part.end());
      }
    return key;
  };

  std::map<std::vector<std::uint32_t>, std::uint64_t> seen;
  std::vector<PolyMatrix> powers{PolyMatrix::identity(coding.field(), sigma.alphabet_size())};
  std::uint64_t m0 = 0;
  std::uint64_t n0 = 0;
  for (std::uint64_t j = 0;; ++j) {
    auto [it, inserted] = seen.emplace(key_of(powers[j]), j);
    if (!inserted) {
      m0 = it->second;
      n0 = j;
      break;
    }
    if (j + 1 > max_powers) throw BudgetExceeded("matrix powers did not cycle within the budget");
    powers.push_back(multiply(ring, powers[j], ev.cycle_matrix()));
  }

  PeriodicityCertificate cert{.factor = ring.modulus()};
  cert.order = t;
  cert.matrix_preperiod = m0;
  cert.matrix_period = n0 - m0;

  const std::uint64_t P = m0 * t;
  const std::uint64_t L = (n0 - m0) * t;
  std::vector<Polynomial> v;
  v.reserve(P + L);
  // n = q t + r with q < n0, so powers[q] is available.
  for (std::uint64_t n = 0; n < P + L; ++n) {
    const PolyMatrix iterate = multiply(ring, ev.iterate_matrix(n % t), powers[n / t]);
    v.push_back(ev.value(w, n, iterate));
  }
  auto at = [&](std::uint64_t i) -> const Polynomial& { return i < P + L ? v[i] : v[P + (i - P) % L]; };

  std::uint64_t period = L;
  for (std::uint64_t d = 1; d <= L; ++d) {
    if (L % d) continue;
    bool ok = true;
    for (std::uint64_t i = P; i < P + L && ok; ++i) ok = at(i) == at(i + d);
    if (ok) {
      period = d;
      break;
    }
  }
  std::uint64_t pre = P;
  while (pre > 0 && v[pre - 1] == at(pre - 1 + period)) --pre;

  cert.preperiod = pre;
  cert.period = period;
  cert.values.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(pre + period));
  return cert;
}

bool LastLetterRecord::distinct_at(std::uint64_t n) const {
  const std::uint64_t i = n < u_values.size() ? n : preperiod + (n - preperiod) % period;
  return u_values[i] != v_values[i];
}

std::string to_string(CoprimeVerdict v) {
  switch (v) {
    case CoprimeVerdict::all_n: return "coprime-for-all-n";
    case CoprimeVerdict::from_n: return "coprime-for-n>=N";
    case CoprimeVerdict::fails_at: return "fails-at";
  }
  return "unknown";
}

bool CoprimalityCertificate::roots_ok_at(std::uint64_t n) const {
  return std::all_of(factors.begin(), factors.end(),
                     [n](const PeriodicityCertificate& c) { return !c.value_at(n).is_zero(); });
}

bool CoprimalityCertificate::origin_ok_at(std::uint64_t n) const {
  if (k == 0 || (k == 1 && n == 0)) return true;
  return last_letters->distinct_at(n);
}

CoprimalityCertificate coprimality_check(const UniformMorphism& sigma, const Coding& coding,
                                         const RepetitionWitness& w, const UnityRootPlan& plan) {
  if (w.V.empty()) throw std::invalid_argument("witness V must be nonempty");
  CoprimalityCertificate cert;
  cert.k = w.k();
  cert.base = sigma.base();
  cert.plan = plan;
  for (const auto& h : plan.factors)
    cert.factors.push_back(periodicity_certificate(sigma, coding, w.V, h));

  std::uint64_t pre = 0;
  std::uint64_t period = 1;
  for (const auto& f : cert.factors) {
    pre = std::max(pre, f.preperiod);
    period = std::lcm(period, f.period);
  }

  if (w.k() > 0) {
    LastLetterRecord rec;
    const Letter b = static_cast<Letter>(sigma.base() - 1);
    std::map<std::pair<Letter, Letter>, std::uint64_t> seen;
    std::pair<Letter, Letter> cur{w.U.back(), w.V.back()};
    for (std::uint64_t j = 0;; ++j) {
      auto [it, inserted] = seen.emplace(cur, j);
      if (!inserted) {
        rec.preperiod = it->second;
        rec.period = j - it->second;
        break;
      }
      rec.u_values.push_back(coding(cur.first));
      rec.v_values.push_back(coding(cur.second));
      cur = {sigma.at(cur.first, b), sigma.at(cur.second, b)};
    }
    pre = std::max(pre, rec.preperiod);
    period = std::lcm(period, rec.period);
    cert.last_letters = std::move(rec);
  }

  // The per-level outcome is periodic from max(pre, 1) on; scan one extra period.
  const std::uint64_t start = std::max<std::uint64_t>(pre, 1);
  const std::uint64_t horizon = start + period;
  std::optional<std::uint64_t> first_fail;
  std::optional<std::uint64_t> last_fail;
  bool fails_in_tail = false;
  for (std::uint64_t n = 1; n < horizon; ++n) {
    if (cert.coprime_at(n)) continue;
    if (!first_fail) first_fail = n;
    last_fail = n;
    if (n >= start) fails_in_tail = true;
  }
  if (!first_fail) {
    cert.verdict = CoprimeVerdict::all_n;
    cert.level = 1;
  } else if (fails_in_tail) {
    cert.verdict = CoprimeVerdict::fails_at;
    cert.level = *first_fail;
  } else {
    cert.verdict = CoprimeVerdict::from_n;
    cert.level = *last_fail + 1;
  }
  return cert;
}

}  // namespace laurexp
