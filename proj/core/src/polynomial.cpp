#include "laurexp/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace laurexp {

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field() && !(*a.field() == *b.field()))
    throw std::invalid_argument("polynomials over different fields");
}

Polynomial::Polynomial(FieldRef field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldRef field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    if (!field_->contains(c)) throw std::invalid_argument("coefficient outside the field");
  normalize();
}

Polynomial Polynomial::from_ints(FieldRef field, std::initializer_list<std::int64_t> coeffs) {
  return from_ints(std::move(field), std::vector<std::int64_t>(coeffs));
}

Polynomial Polynomial::from_ints(FieldRef field, const std::vector<std::int64_t>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(field->from_int(v));
  return Polynomial(std::move(field), std::move(c));
}

Polynomial Polynomial::constant(FieldRef field, FieldElement c) {
  return Polynomial(std::move(field), {c});
}

Polynomial Polynomial::monomial(FieldRef field, FieldElement c, std::size_t k) {
  std::vector<FieldElement> v(k + 1, field->zero());
  v[k] = c;
  return Polynomial(std::move(field), std::move(v));
}

Polynomial Polynomial::x_pow_minus_one(FieldRef field, std::size_t n) {
  std::vector<FieldElement> v(n + 1, field->zero());
  v[n] = field->one();
  v[0] = field->sub(v[0], field->one());
  return Polynomial(std::move(field), std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

std::int64_t Polynomial::degree() const {
  return is_zero() ? kDegreeNegInf : static_cast<std::int64_t>(coeffs_.size()) - 1;
}

FieldElement Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : field_->zero();
}

FieldElement Polynomial::leading() const {
  return is_zero() ? field_->zero() : coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_);
  r.coeffs_.reserve(coeffs_.size());
  for (auto c : coeffs_) r.coeffs_.push_back(field_->neg(c));
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  const auto& F = *a.field_;
  Polynomial r(a.field_);
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), F.zero());
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = F.add(a.coeff(i), b.coeff(i));
  r.normalize();
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  Polynomial r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  const auto& F = *a.field_;
  if (F.degree() == 1) {
    // Accumulate in 64 bits and reduce lazily.
    const std::uint64_t p = F.characteristic();
    std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - p * p;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      const std::uint64_t x = a.coeffs_[i].code;
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        std::uint64_t& s = acc[i + j];
        s += x * b.coeffs_[j].code;
        if (s > limit) s %= p;
      }
    }
    r.coeffs_.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
      r.coeffs_[i] = {static_cast<std::uint32_t>(acc[i] % p)};
  } else {
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] = F.add(r.coeffs_[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::scaled(FieldElement c) const {
  Polynomial r(field_);
  r.coeffs_.reserve(coeffs_.size());
  for (auto x : coeffs_) r.coeffs_.push_back(field_->mul(x, c));
  r.normalize();
  return r;
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  Polynomial r(field_);
  r.coeffs_.assign(k, field_->zero());
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Polynomial Polynomial::compose_power(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("compose_power expects k >= 1");
  if (is_zero() || k == 1) return *this;
  Polynomial r(field_);
  r.coeffs_.assign((coeffs_.size() - 1) * k + 1, field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * k] = coeffs_[i];
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

FieldElement Polynomial::eval(FieldElement x) const {
  FieldElement acc = field_->zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  require_same_field(*this, d);
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& F = *field_;
  Polynomial q(field_);
  if (coeffs_.size() < d.coeffs_.size()) return {q, *this};
  std::vector<FieldElement> rem = coeffs_;
  const std::size_t dd = d.coeffs_.size() - 1;
  const FieldElement inv_lead = F.inv(d.leading());
  q.coeffs_.assign(rem.size() - dd, F.zero());
  for (std::size_t top = rem.size(); top-- > dd;) {
    const FieldElement c = rem[top];
    if (c.code == 0) continue;
    const FieldElement f = F.mul(c, inv_lead);
    const std::size_t shift = top - dd;
    q.coeffs_[shift] = f;
    for (std::size_t i = 0; i <= dd; ++i)
      rem[shift + i] = F.sub(rem[shift + i], F.mul(f, d.coeffs_[i]));
  }
  rem.resize(dd);
  q.normalize();
  return {q, Polynomial(field_, std::move(rem))};
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const FieldElement c = coeffs_[i];
    if (c.code == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != field_->one() || i == 0) os << field_->format(c);
    if (i >= 1) os << 'T';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  require_same_field(a, b);
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial pow_mod(const Polynomial& a, std::uint64_t e, const Polynomial& m) {
  Polynomial acc = Polynomial::constant(a.field(), a.field()->one()) % m;
  Polynomial base = a % m;
  while (e) {
    if (e & 1) acc = (acc * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return acc;
}

}  // namespace laurexp
