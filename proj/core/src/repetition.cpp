#include "laurexp/repetition.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "laurexp/errors.hpp"

namespace laurexp {

std::string to_string(WitnessMode mode) {
  switch (mode) {
    case WitnessMode::pigeonhole: return "pigeonhole";
    case WitnessMode::empirical: return "empirical";
    case WitnessMode::supplied: return "supplied";
  }
  return "unknown";
}

Word repetition_prefix(const Word& U, const Word& V, const Rational& omega) {
  if (V.empty()) throw std::invalid_argument("V must be nonempty");
  if (omega < 0) throw std::invalid_argument("omega must be nonnegative");
  Word out = U;
  const BigInt whole = floor(omega);
  for (BigInt i = 0; i < whole; ++i) out.insert(out.end(), V.begin(), V.end());
  const Rational frac = omega - Rational(whole);
  const auto tail = static_cast<std::size_t>(ceil(frac * V.size()));
  out.insert(out.end(), V.begin(), V.begin() + static_cast<std::ptrdiff_t>(tail));
  return out;
}

RepetitionWitness pigeonhole_witness(const UniformMorphism& sigma, Letter seed, std::size_t e) {
  const std::size_t limit = std::max(e + 1, sigma.alphabet_size() + 1);
  std::vector<std::int64_t> first_seen(sigma.alphabet_size(), -1);
  const std::size_t b = sigma.base();
  Word prefix{seed};
  for (std::size_t j = 0; j < limit; ++j) {
    if (j >= prefix.size()) prefix.push_back(sigma.at(prefix[j / b], j % b));
    const Letter c = prefix[j];
    if (first_seen[c] >= 0) {
      const auto i = static_cast<std::size_t>(first_seen[c]);
      RepetitionWitness w;
      w.U.assign(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(i));
      w.V.assign(prefix.begin() + static_cast<std::ptrdiff_t>(i),
                 prefix.begin() + static_cast<std::ptrdiff_t>(j));
      w.omega = Rational(1) + Rational(1, static_cast<long long>(w.V.size()));
      w.mode = WitnessMode::pigeonhole;
      return w;
    }
    first_seen[c] = static_cast<std::int64_t>(j);
  }
  throw std::logic_error("pigeonhole found no repeated letter");
}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kIndexLimit = std::uint64_t{1} << 62;

std::uint64_t checked_pow(std::uint64_t b, std::uint32_t n) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (r > kIndexLimit / b) throw BudgetExceeded("b^n exceeds the supported index range");
    r *= b;
  }
  return r;
}

}  // namespace

std::optional<std::uint64_t> first_mismatch(SequenceStream& stream, const Word& U, const Word& V,
                                            std::uint32_t n, std::uint64_t budget) {
  if (V.empty()) throw std::invalid_argument("V must be nonempty");
  const UniformMorphism& sigma = stream.morphism();
  const Coding& phi = stream.coding();
  const std::size_t m = sigma.alphabet_size();
  const std::size_t b = sigma.base();
  const std::uint64_t block = checked_pow(b, n);

  // depth[j][x * m + y]: first coded mismatch between sigma^j(x) and sigma^j(y).
  std::vector<std::vector<std::uint64_t>> depth(n + 1, std::vector<std::uint64_t>(m * m, kNone));
  for (Letter x = 0; x < m; ++x)
    for (Letter y = 0; y < m; ++y)
      if (phi(x) != phi(y)) depth[0][x * m + y] = 0;
  std::uint64_t sub = 1;
  for (std::uint32_t j = 1; j <= n; ++j) {
    for (Letter x = 0; x < m; ++x)
      for (Letter y = 0; y < m; ++y) {
        if (x == y) continue;
        for (std::size_t d = 0; d < b; ++d) {
          const std::uint64_t inner = depth[j - 1][sigma.at(x, d) * m + sigma.at(y, d)];
          if (inner != kNone) {
            depth[j][x * m + y] = d * sub + inner;
            break;
          }
        }
      }
    sub *= b;
  }

  const std::size_t k = U.size();
  for (std::uint64_t i = 0; i < kIndexLimit / block && i * block < budget; ++i) {
    const Letter x = stream.letter(static_cast<std::size_t>(i));
    const Letter y = i < k ? U[i] : V[(i - k) % V.size()];
    const std::uint64_t d = depth[n][x * m + y];
    if (d == kNone) continue;
    const std::uint64_t pos = i * block + d;
    if (pos >= budget) return std::nullopt;
    return pos;
  }
  return std::nullopt;
}

std::uint64_t default_budget(const RepetitionWitness& w, std::size_t base, std::uint32_t n) {
  Rational v = w.agreement_factor() * 4;
  for (std::uint32_t i = 0; i < n; ++i) {
    v *= base;
    if (v > Rational(kIndexLimit)) return kIndexLimit;
  }
  return static_cast<std::uint64_t>(ceil(v)) + 1;
}

AgreementRecord measure_agreement(SequenceStream& stream, const RepetitionWitness& w,
                                  std::uint32_t n, std::uint64_t budget) {
  AgreementRecord rec;
  rec.level = n;
  rec.expected = w.agreement_factor() * Rational(ipow(stream.morphism().base(), n));
  if (rec.expected >= Rational(kIndexLimit))
    throw BudgetExceeded("(k + omega l) b^n exceeds the supported index range at n = " + std::to_string(n));
  if (Rational(budget) <= rec.expected)
    throw std::invalid_argument("agreement budget must exceed (k + omega l) b^n");
  rec.measured = first_mismatch(stream, w.U, w.V, n, budget);
  rec.exact_match = rec.measured && Rational(*rec.measured) == rec.expected;
  return rec;
}

RepetitionWitness search_witness(SequenceStream& stream, const SearchOptions& options) {
  if (options.max_k < 1 || options.max_l < 1)
    throw std::invalid_argument("witness search bounds must be >= 1");
  struct Candidate {
    std::size_t k, l;
    Rational omega;
  };
  const Word x = stream.internal_prefix(options.max_k + options.max_l);
  std::vector<Candidate> candidates;
  for (std::size_t k = 0; k <= options.max_k; ++k)
    for (std::size_t l = 1; l <= options.max_l; ++l) {
      const Word U(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
      const Word V(x.begin() + static_cast<std::ptrdiff_t>(k),
                   x.begin() + static_cast<std::ptrdiff_t>(k + l));
      const auto L0 = first_mismatch(stream, U, V, 0, options.scan_limit);
      if (!L0) continue;
      const Rational omega(static_cast<long long>(*L0) - static_cast<long long>(k),
                           static_cast<long long>(l));
      if (omega > 1) candidates.push_back({k, l, omega});
    }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.omega != b.omega) return a.omega > b.omega;
    if (a.k + a.l != b.k + b.l) return a.k + a.l < b.k + b.l;
    return a.l < b.l;
  });
  const std::size_t base = stream.morphism().base();
  for (const auto& c : candidates) {
    RepetitionWitness w;
    w.U.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(c.k));
    w.V.assign(x.begin() + static_cast<std::ptrdiff_t>(c.k),
               x.begin() + static_cast<std::ptrdiff_t>(c.k + c.l));
    w.omega = c.omega;
    w.mode = WitnessMode::empirical;
    bool valid = true;
    for (std::uint32_t n = 1; n <= options.n_check && valid; ++n) {
      const auto rec = measure_agreement(stream, w, n, default_budget(w, base, n));
      valid = rec.measured && Rational(*rec.measured) >= rec.expected;
    }
    if (valid) return w;
  }
  throw NoWitness("no repetition with omega > 1 among prefixes with k <= " +
                  std::to_string(options.max_k) + ", l <= " + std::to_string(options.max_l));
}

}  // namespace laurexp
