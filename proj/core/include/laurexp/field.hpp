#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace laurexp {

/// An element of F_q stored as the packed integer sum c_i p^i of its
/// polynomial-basis coordinates. Only meaningful together with its Field.
struct FieldElement {
  std::uint32_t code = 0;

  friend bool operator==(FieldElement, FieldElement) = default;
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// Finite field F_q, q = p^u, realized as F_p[y]/(modulus).
///
/// Instances are immutable and shared through FieldRef. Two fields are equal
/// when their descriptors (p, u, modulus) coincide.
class Field {
 public:
  /// F_p. Throws std::invalid_argument when p is not a prime below 2^16.
  static std::shared_ptr<const Field> prime(std::uint32_t p);

  /// F_p[y]/(modulus); modulus is monic of degree u, lowest coefficient first.
  /// Throws std::invalid_argument unless the modulus is irreducible over F_p.
  static std::shared_ptr<const Field> extension(std::uint32_t p,
                                                std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return u_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  bool contains(FieldElement a) const { return a.code < q_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// "3" over a prime field, "(1 + 2y)" style over an extension.
  std::string format(FieldElement a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t u_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;  // empty when u == 1
};

using FieldRef = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

/// True when n = base^j for some j >= 1.
bool is_power_of(std::uint64_t n, std::uint64_t base);

}  // namespace laurexp
