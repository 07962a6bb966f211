#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laurexp/rational.hpp"

namespace laurexp {

/// Certified interval for the irrationality exponent, all values exact.
struct BoundReport {
  std::optional<Rational> lower;
  Rational upper;
  std::optional<Rational> exact;
  std::string provenance;
  std::vector<std::string> assumptions;
};

/// From approximants with |f - P_n/Q_n| = |Q_n|^{-(1+delta)}, |Q_{n+1}| <= |Q_n|^theta
/// and the next agreement bounded by rho: lower = 1 + delta,
/// upper = theta (1 + rho) / delta, or max(1 + rho, 1 + theta / delta) when the
/// approximants are reduced; exact when additionally rho = delta and theta <= delta^2.
/// Throws std::invalid_argument unless 0 < delta <= rho and theta >= 1.
BoundReport approximation_bounds(const Rational& delta, const Rational& rho, const Rational& theta,
                                 bool coprime);

/// Bounds from a repetition witness (k, l, omega) on a base-b sequence with
/// kernel size s. `exactness` means the agreement lengths are exactly
/// (k + omega l) b^n; `coprime` means gcd(P_n, Q_n) = 1 and only counts together
/// with exactness. Throws std::invalid_argument when omega <= 1 or l == 0.
BoundReport witness_bounds(std::uint64_t k, std::uint64_t ell, const Rational& omega,
                           std::uint64_t base, std::uint64_t s, bool exactness, bool coprime);

/// upper = b^{s+1} e.
BoundReport general_bound(std::uint64_t base, std::uint64_t s, std::uint64_t e);

/// Liouville-type bound for an algebraic series of degree d: upper = d.
BoundReport liouville_mahler_bound(std::uint64_t degree);

}  // namespace laurexp
