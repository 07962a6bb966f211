#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laurexp/rational.hpp"
#include "laurexp/words.hpp"

namespace laurexp {

enum class WitnessSource { search, pigeonhole };

/// A problem description read from a `key = value` file.
///
///   name = ex1
///   p = 2
///   b = 4
///   m = 2
///   images = [0001, 1001]        # or [[0,0,0,1], [1,0,0,1]]
///   coding = [0, 1]
///   seed = 0
///   equation = [[0,1], [1,0,0,0,1], [], [], [1,0,0,0,1]]
///
/// Optional keys: witness_u, witness_v, witness_omega (all three together),
/// witness = search|pigeonhole, search_k, search_l, n_check, depth.
/// Equation entries are the coefficients c_i(T) of sum_i c_i X^i, each lowest
/// degree first.
struct ProblemSpec {
  std::string name;
  std::uint32_t p = 0;
  std::uint64_t b = 0;
  std::size_t m = 0;
  std::vector<Word> images;
  std::vector<std::int64_t> coding;
  Letter seed = 0;

  std::optional<Word> witness_u;
  std::optional<Word> witness_v;
  std::optional<Rational> witness_omega;
  WitnessSource witness_source = WitnessSource::search;
  std::size_t search_k = 4;
  std::size_t search_l = 8;
  std::uint32_t n_check = 8;
  std::int64_t depth = 200;
  std::optional<std::vector<std::vector<std::int64_t>>> equation;

  /// Line of each key in the source text, for diagnostics.
  std::map<std::string, std::size_t> lines;
  std::size_t line_of(const std::string& key) const;
};

/// Parses and validates; throws SpecError with the offending line.
ProblemSpec parse_spec(const std::string& text);
/// Reads a file; throws SpecError (line 0) when it cannot be opened.
ProblemSpec load_spec(const std::string& path);

/// "0001" for letters < 10, otherwise comma separated.
Word parse_word(const std::string& text);

}  // namespace laurexp
