#include "laurexp/series.hpp"

#include <algorithm>
#include <sstream>

#include "laurexp/wordpoly.hpp"

namespace laurexp {

namespace {

std::int64_t cap(std::int64_t v) { return std::min(v, kExactPrecision); }

}  // namespace

LaurentSeries::LaurentSeries(FieldRef field, std::int64_t end)
    : field_(std::move(field)), start_(end), end_(cap(end)) {
  start_ = end_;
}

LaurentSeries::LaurentSeries(FieldRef field, std::int64_t start, std::vector<FieldElement> coeffs,
                             std::int64_t end)
    : field_(std::move(field)), start_(start), coeffs_(std::move(coeffs)), end_(cap(end)) {
  if (stored_end() > end_) coeffs_.resize(static_cast<std::size_t>(std::max<std::int64_t>(end_ - start_, 0)));
  trim();
}

void LaurentSeries::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == field_->zero()) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    start_ = end_;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  start_ += static_cast<std::int64_t>(lead);
  while (coeffs_.back() == field_->zero()) coeffs_.pop_back();
}

LaurentSeries LaurentSeries::from_sequence(FieldRef field, const CodedWord& terms) {
  return LaurentSeries(field, 0, terms, static_cast<std::int64_t>(terms.size()));
}

LaurentSeries LaurentSeries::from_polynomial(const Polynomial& p) {
  if (p.is_zero()) return LaurentSeries(p.field(), kExactPrecision);
  std::vector<FieldElement> c(p.coeffs().rbegin(), p.coeffs().rend());
  return LaurentSeries(p.field(), -p.degree(), std::move(c), kExactPrecision);
}

FieldElement LaurentSeries::coeff(std::int64_t i) const {
  if (i >= end_) throw std::out_of_range("coefficient " + std::to_string(i) + " is beyond the known precision");
  if (i < start_ || i >= stored_end()) return field_->zero();
  return coeffs_[static_cast<std::size_t>(i - start_)];
}

std::int64_t LaurentSeries::valuation() const { return coeffs_.empty() ? end_ : start_; }

LaurentSeries LaurentSeries::truncated(std::int64_t end) const {
  return LaurentSeries(field_, start_, coeffs_, std::min(end, end_));
}

namespace {

LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
  require_same_field(Polynomial(a.field()), Polynomial(b.field()));
  const Field& F = *a.field();
  const std::int64_t end = std::min(a.end(), b.end());
  const std::int64_t lo = std::min(a.valuation(), b.valuation());
  const std::int64_t sa = a.known_zero() ? lo : a.stored_end();
  const std::int64_t sb = b.known_zero() ? lo : b.stored_end();
  const std::int64_t hi = std::min(end, std::max(sa, sb));
  if (lo >= hi) return LaurentSeries(a.field(), end);
  std::vector<FieldElement> c(static_cast<std::size_t>(hi - lo));
  for (std::int64_t i = lo; i < hi; ++i) {
    const FieldElement y = b.coeff(i);
    c[static_cast<std::size_t>(i - lo)] = subtract ? F.sub(a.coeff(i), y) : F.add(a.coeff(i), y);
  }
  return LaurentSeries(a.field(), lo, std::move(c), end);
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, false); }
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, true); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_field(Polynomial(a.field()), Polynomial(b.field()));
  const Field& F = *a.field();
  const std::int64_t va = a.valuation();
  const std::int64_t vb = b.valuation();
  const std::int64_t end = cap(std::min(a.end() + vb, b.end() + va));
  if (a.known_zero() || b.known_zero()) return LaurentSeries(a.field(), end);
  const std::int64_t lo = va + vb;
  const std::int64_t hi = std::min(end, a.stored_end() + b.stored_end() - 1);
  if (lo >= hi) return LaurentSeries(a.field(), end);
  std::vector<FieldElement> c(static_cast<std::size_t>(hi - lo));
  const bool prime = F.degree() == 1;
  const std::uint64_t p = F.characteristic();
  for (std::int64_t i = lo; i < hi; ++i) {
    const std::int64_t ia_lo = std::max(va, i - b.stored_end() + 1);
    const std::int64_t ia_hi = std::min(a.stored_end() - 1, i - vb);
    if (prime) {
      std::uint64_t acc = 0;
      for (std::int64_t ia = ia_lo; ia <= ia_hi; ++ia) {
        acc += static_cast<std::uint64_t>(a.coeff(ia).code) * b.coeff(i - ia).code;
        if (acc >= (std::uint64_t{1} << 62)) acc %= p;
      }
      c[static_cast<std::size_t>(i - lo)] = FieldElement{static_cast<std::uint32_t>(acc % p)};
    } else {
      FieldElement acc = F.zero();
      for (std::int64_t ia = ia_lo; ia <= ia_hi; ++ia) acc = F.add(acc, F.mul(a.coeff(ia), b.coeff(i - ia)));
      c[static_cast<std::size_t>(i - lo)] = acc;
    }
  }
  return LaurentSeries(a.field(), lo, std::move(c), end);
}

LaurentSeries LaurentSeries::pow(std::uint64_t e) const {
  LaurentSeries acc = from_polynomial(Polynomial::constant(field_, field_->one()));
  LaurentSeries base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

std::string LaurentSeries::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  std::size_t shown = 0;
  for (std::int64_t i = start_; i < stored_end() && shown < max_terms; ++i) {
    const FieldElement c = coeff(i);
    if (c == field_->zero()) continue;
    if (shown++) os << " + ";
    if (c != field_->one() || i == 0) os << field_->format(c);
    if (i != 0) os << "T^" << -i;
  }
  if (!exact()) os << (shown ? " + " : "") << "O(T^" << -end_ << ")";
  else if (!shown) os << "0";
  return os.str();
}

RationalFunction RationalFunction::reduced() const {
  if (denominator.is_zero()) throw std::domain_error("zero denominator");
  const Polynomial g = poly_gcd(numerator, denominator);
  Polynomial num = numerator / g;
  Polynomial den = denominator / g;
  const FieldElement lead = den.leading();
  const Field& F = *den.field();
  return {num.scaled(F.inv(lead)), den.scaled(F.inv(lead))};
}

std::int64_t RationalFunction::degree() const {
  if (numerator.is_zero()) return kDegreeNegInf;
  return numerator.degree() - denominator.degree();
}

LaurentSeries expand_rational(const RationalFunction& r, std::int64_t N) {
  const Polynomial& P = r.numerator;
  const Polynomial& Q = r.denominator;
  if (Q.is_zero()) throw std::domain_error("zero denominator");
  require_same_field(P, Q);
  const FieldRef& field = Q.field();
  if (P.is_zero()) return LaurentSeries(field, N);
  const Field& F = *field;
  const std::int64_t dp = P.degree();
  const std::int64_t dq = Q.degree();
  const std::int64_t start = dq - dp;
  if (start >= N) return LaurentSeries(field, N);
  const std::size_t terms = static_cast<std::size_t>(N - start);
  const FieldElement inv_lead = F.inv(Q.leading());
  std::vector<std::pair<std::size_t, FieldElement>> tail;  // (l, coefficient of T^{dq-l}), l >= 1
  for (std::size_t l = 1; l <= static_cast<std::size_t>(dq); ++l) {
    const FieldElement q = Q.coeff(static_cast<std::size_t>(dq) - l);
    if (q != F.zero()) tail.emplace_back(l, q);
  }
  std::vector<FieldElement> c(terms);
  for (std::size_t j = 0; j < terms; ++j) {
    FieldElement acc = j <= static_cast<std::size_t>(dp) ? P.coeff(static_cast<std::size_t>(dp) - j) : F.zero();
    for (const auto& [l, q] : tail) {
      if (l > j) break;
      acc = F.sub(acc, F.mul(q, c[j - l]));
    }
    c[j] = F.mul(acc, inv_lead);
  }
  return LaurentSeries(field, start, std::move(c), N);
}

RationalFunction word_to_rational(const FieldRef& field, const CodedWord& U, const CodedWord& V) {
  if (V.empty()) throw std::invalid_argument("V must be nonempty");
  const Polynomial tl = Polynomial::x_pow_minus_one(field, V.size());
  const Polynomial pv = word_poly(field, V);
  if (U.empty()) return {pv.shifted(1), tl};
  return {word_poly(field, U) * tl + pv, tl.shifted(U.size() - 1)};
}

std::string DegreeValue::to_string() const {
  if (exponent == kDegreeNegInf) return "-inf";
  return (bounded ? "<= " : "") + std::to_string(exponent);
}

DegreeValue distance_degree(const LaurentSeries& f, const LaurentSeries& g) {
  const LaurentSeries d = f - g;
  if (!d.known_zero()) return {-d.valuation(), false};
  if (d.exact()) return {kDegreeNegInf, false};
  return {-d.end(), true};
}

AlgebraicVerdict verify_algebraic(const LaurentSeries& f, const std::vector<Polynomial>& equation,
                                  std::int64_t depth) {
  if (equation.empty()) throw std::invalid_argument("equation has no coefficients");
  LaurentSeries sum(f.field(), kExactPrecision);
  LaurentSeries power = LaurentSeries::from_polynomial(Polynomial::constant(f.field(), f.field()->one()));
  for (std::size_t i = 0; i < equation.size(); ++i) {
    if (i) power = power * f;
    if (!equation[i].is_zero()) sum = sum + LaurentSeries::from_polynomial(equation[i]) * power;
  }
  if (sum.end() <= depth) {
    const std::int64_t required = f.end() + (depth + 1 - sum.end());
    throw InsufficientPrecision(required, "series known to " + std::to_string(f.end()) +
                                              " terms only reaches index " +
                                              std::to_string(sum.end() - 1) + "; need " +
                                              std::to_string(required) + " terms for depth " +
                                              std::to_string(depth));
  }
  AlgebraicVerdict v;
  v.checked_through = depth;
  if (sum.valuation() <= depth) {
    v.consistent = false;
    v.first_offending_index = sum.valuation();
  }
  return v;
}

LaurentSeries fixed_point_solve(const std::vector<RationalFunction>& map, std::int64_t N) {
  if (map.empty()) throw std::invalid_argument("empty map");
  const FieldRef& field = map.front().denominator.field();
  std::int64_t pad = 1;
  for (const auto& g : map)
    if (!g.numerator.is_zero()) pad += std::max<std::int64_t>(0, g.degree());
  const std::int64_t W = N + pad;
  std::vector<LaurentSeries> G;
  for (const auto& g : map) G.push_back(expand_rational(g, W));

  LaurentSeries X(field, W);
  std::int64_t prev_gain = kDegreeNegInf;
  for (std::int64_t iter = 0; iter <= W + 1; ++iter) {
    LaurentSeries next(field, kExactPrecision);
    LaurentSeries power = LaurentSeries::from_polynomial(Polynomial::constant(field, field->one()));
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (i) power = power * X;
      next = next + G[i] * power;
    }
    next = next.truncated(W);
    if (next.end() < N) throw std::invalid_argument("map loses precision below the requested length");
    const std::int64_t gain = (next - X).valuation();
    if (gain >= N) return next.truncated(N);
    if (iter > 0 && gain <= prev_gain)
      throw std::invalid_argument("no valuation gain at iteration " + std::to_string(iter) +
                                  ": map is not contracting");
    prev_gain = gain;
    X = std::move(next);
  }
  throw std::invalid_argument("iteration did not stabilize");
}

}  // namespace laurexp
