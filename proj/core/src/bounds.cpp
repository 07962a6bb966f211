#include "laurexp/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace laurexp {

BoundReport approximation_bounds(const Rational& delta, const Rational& rho, const Rational& theta,
                                 bool coprime) {
  if (delta <= 0) throw std::invalid_argument("delta must be positive, got " + to_string(delta));
  if (rho < delta) throw std::invalid_argument("rho must be >= delta, got " + to_string(rho));
  if (theta < 1) throw std::invalid_argument("theta must be >= 1, got " + to_string(theta));
  BoundReport r;
  r.lower = 1 + delta;
  r.provenance = "approximation lemma";
  if (coprime) {
    r.upper = std::max<Rational>(1 + rho, 1 + theta / delta);
    r.assumptions.push_back("approximants reduced");
    if (rho == delta && theta <= delta * delta) r.exact = *r.lower;
  } else {
    r.upper = theta * (1 + rho) / delta;
  }
  return r;
}

BoundReport witness_bounds(std::uint64_t k, std::uint64_t ell, const Rational& omega,
                           std::uint64_t base, std::uint64_t s, bool exactness, bool coprime) {
  if (omega <= 1) throw std::invalid_argument("omega must exceed 1, got " + to_string(omega));
  if (ell == 0) throw std::invalid_argument("l must be positive");
  const Rational kk(k);
  const Rational ll(ell);
  const Rational b(base);
  BoundReport r;
  r.lower = (kk + omega * ll) / (kk + ll);
  if (!exactness) {
    r.upper = Rational(ipow(base, s + 1)) * (kk + ll) / ((omega - 1) * ll);
    r.provenance = "witness theorem (kernel size)";
    r.assumptions.push_back("agreement at least (k + omega l) b^n");
    return r;
  }
  r.assumptions.push_back("agreement exactly (k + omega l) b^n");
  if (coprime) {
    r.upper = std::max<Rational>(*r.lower, 1 + b * (kk + ll) / ((omega - 1) * ll));
    r.provenance = "witness theorem (exact agreement, reduced approximants)";
    r.assumptions.push_back("gcd(P_n, Q_n) = 1");
    if (*r.lower == r.upper) r.exact = r.upper;
  } else {
    r.upper = b * (kk + omega * ll) / ((omega - 1) * ll);
    r.provenance = "witness theorem (exact agreement)";
  }
  return r;
}

BoundReport general_bound(std::uint64_t base, std::uint64_t s, std::uint64_t e) {
  if (s < 1 || e < 1) throw std::invalid_argument("kernel size and state count must be >= 1");
  BoundReport r;
  r.upper = Rational(ipow(base, s + 1) * e);
  r.provenance = "kernel-automaton bound";
  r.assumptions.push_back("s is the base-" + std::to_string(base) + " kernel size");
  return r;
}

BoundReport liouville_mahler_bound(std::uint64_t degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  BoundReport r;
  r.upper = Rational(degree);
  r.provenance = "Liouville-Mahler";
  r.assumptions.push_back("algebraic of degree " + std::to_string(degree));
  return r;
}

}  // namespace laurexp
