#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laurexp/rational.hpp"
#include "laurexp/words.hpp"

namespace laurexp {

enum class WitnessMode { pigeonhole, empirical, supplied };

std::string to_string(WitnessMode mode);

/// U V^omega is a prefix of the coded sequence; the iterates
/// U_n = phi(sigma^n(U)), V_n = phi(sigma^n(V)) give the approximants
/// c_n = U_n V_n^inf.
struct RepetitionWitness {
  Word U;
  Word V;  // nonempty
  Rational omega;
  WitnessMode mode = WitnessMode::empirical;

  std::size_t k() const { return U.size(); }
  std::size_t ell() const { return V.size(); }
  /// k + omega * l, the level-0 agreement length.
  Rational agreement_factor() const { return Rational(k()) + omega * ell(); }
};

/// U V^omega as a word, with V^omega = V^floor(omega) V' and
/// |V'| = ceil((omega - floor(omega)) |V|).
Word repetition_prefix(const Word& U, const Word& V, const Rational& omega);

struct AgreementRecord {
  std::uint32_t level = 0;
  Rational expected;                     // (k + omega l) b^n
  std::optional<std::uint64_t> measured;  // first mismatch; empty when the budget ran out
  bool exact_match = false;              // measured == expected
};

/// Pigeonhole witness from the length-(e+1) prefix of sigma^inf(a): the first
/// repeated letter splits it as U' b V' b, giving U = U', V = bV',
/// omega = 1 + 1/l. If e+1 letters show no repetition the prefix is extended up
/// to m+1 letters, where one always exists.
RepetitionWitness pigeonhole_witness(const UniformMorphism& sigma, Letter seed, std::size_t e);

/// First index where phi(sigma^inf(a)) and phi(sigma^n(U V^inf)) differ, or
/// empty when none is found below `budget` letters.
///
/// Both words are concatenations of blocks sigma^n(x) of length b^n, so only
/// the first block pair (x_i, y_i) whose images differ after coding is
/// descended. Throws BudgetExceeded when b^n does not fit the index range.
std::optional<std::uint64_t> first_mismatch(SequenceStream& stream, const Word& U, const Word& V,
                                            std::uint32_t n, std::uint64_t budget);

/// 4 (k + omega l) b^n, saturating at 2^62.
std::uint64_t default_budget(const RepetitionWitness& w, std::size_t base, std::uint32_t n);

/// Throws std::invalid_argument when budget <= (k + omega l) b^n.
AgreementRecord measure_agreement(SequenceStream& stream, const RepetitionWitness& w,
                                  std::uint32_t n, std::uint64_t budget);

struct SearchOptions {
  std::size_t max_k = 4;
  std::size_t max_l = 8;
  std::uint32_t n_check = 8;
  /// Letters scanned for the level-0 mismatch of each candidate.
  std::uint64_t scan_limit = 1u << 16;
};

/// Scans (U, V) = (x[0, k), x[k, k + l)) over the internal prefix x, keeping
/// the candidate with the largest omega* = (L_0 - k) / l that survives
/// validation at levels 1..n_check. Ties prefer smaller k + l, then smaller l.
/// Throws NoWitness when no candidate has omega* > 1.
RepetitionWitness search_witness(SequenceStream& stream, const SearchOptions& options);

}  // namespace laurexp
