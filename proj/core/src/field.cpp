#include "laurexp/field.hpp"

#include <sstream>
#include <stdexcept>

namespace laurexp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_power_of(std::uint64_t n, std::uint64_t base) {
  if (base < 2 || n < base) return false;
  while (n % base == 0) n /= base;
  return n == 1;
}

namespace {

using Digits = std::vector<std::uint32_t>;

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
Digits reduce(Digits a, const Digits& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  trim(a);
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * m[i]) % p);
    trim(a);
  }
  return a;
}

Digits mul_mod(const Digits& a, const Digits& b, const Digits& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return reduce(std::move(r), m, p);
}

Digits sub_digits(Digits a, const Digits& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Digits gcd_digits(Digits a, Digits b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // Make b monic, then a := a mod b.
    std::uint64_t lead = b.back();
    std::uint64_t inv = 1;
    for (std::uint32_t e = p - 2, base = static_cast<std::uint32_t>(lead); e; e >>= 1) {
      if (e & 1) inv = inv * base % p;
      base = static_cast<std::uint32_t>(std::uint64_t{base} * base % p);
    }
    for (auto& c : b) c = static_cast<std::uint32_t>(c * inv % p);
    a = reduce(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin's test: m (monic, degree u) is irreducible iff y^{p^u} = y mod m and
// gcd(y^{p^{u/r}} - y, m) = 1 for every prime r | u.
bool irreducible(const Digits& m, std::uint32_t p) {
  const std::size_t u = m.size() - 1;
  if (u == 1) return true;
  auto frob_iter = [&](std::size_t times) {
    Digits y{0, 1};
    Digits x = reduce(y, m, p);
    for (std::size_t t = 0; t < times; ++t) {
      Digits acc{1};
      Digits base = x;
      for (std::uint32_t e = p; e; e >>= 1) {
        if (e & 1) acc = mul_mod(acc, base, m, p);
        base = mul_mod(base, base, m, p);
      }
      x = acc;
    }
    return x;
  };
  const Digits y = reduce(Digits{0, 1}, m, p);
  if (sub_digits(frob_iter(u), y, p) != Digits{}) return false;
  for (std::size_t r = 2; r <= u; ++r) {
    if (u % r != 0 || !is_prime(r)) continue;
    Digits g = gcd_digits(m, sub_digits(frob_iter(u / r), y, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), u_(modulus.empty() ? 1 : static_cast<std::uint32_t>(modulus.size() - 1)),
      q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < u_; ++i) q_ *= p_;
}

std::shared_ptr<const Field> Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 16))
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not a prime below 65536");
  return std::shared_ptr<const Field>(new Field(p, {}));
}

std::shared_ptr<const Field> Field::extension(std::uint32_t p,
                                              std::vector<std::uint32_t> modulus) {
  if (!is_prime(p) || p >= (1u << 16))
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not a prime below 65536");
  for (auto c : modulus)
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  trim(modulus);
  if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
  if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
  if (modulus.size() == 2) return prime(p);
  std::uint64_t q = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i) {
    q *= p;
    if (q > (1ull << 31)) throw std::invalid_argument("field order exceeds 2^31");
  }
  if (!irreducible(modulus, p)) throw std::invalid_argument("modulus is not irreducible");
  return std::shared_ptr<const Field>(new Field(p, std::move(modulus)));
}

FieldElement Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElement Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > u_) throw std::invalid_argument("too many coordinates for field element");
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("coordinate out of range");
    code = code * p_ + coeffs[i];
  }
  return {static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
  std::vector<std::uint32_t> out(u_, 0);
  std::uint32_t c = a.code;
  for (std::uint32_t i = 0; i < u_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (u_ == 1) return {static_cast<std::uint32_t>((a.code + b.code) % p_)};
  std::uint64_t code = 0, scale = 1;
  std::uint32_t x = a.code, y = b.code;
  for (std::uint32_t i = 0; i < u_; ++i) {
    code += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return {static_cast<std::uint32_t>(code)};
}

FieldElement Field::neg(FieldElement a) const {
  if (u_ == 1) return {(p_ - a.code) % p_};
  std::uint64_t code = 0, scale = 1;
  std::uint32_t x = a.code;
  for (std::uint32_t i = 0; i < u_; ++i) {
    code += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return {static_cast<std::uint32_t>(code)};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (u_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
  Digits x = coeffs(a), y = coeffs(b);
  trim(x);
  trim(y);
  Digits r = mul_mod(x, y, modulus_, p_);
  r.resize(u_, 0);
  return from_coeffs(r);
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  FieldElement acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  return pow(a, q_ - 2);
}

std::string Field::format(FieldElement a) const {
  if (u_ == 1) return std::to_string(a.code);
  auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << 'y';
    if (i >= 2) os << '^' << i;
  }
  if (first) return "0";
  return "(" + os.str() + ")";
}

}  // namespace laurexp
