#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurexp/field.hpp"

namespace laurexp {

using Letter = std::uint32_t;
/// A finite word over the internal alphabet A_m = {0, ..., m-1}.
using Word = std::vector<Letter>;
/// A finite word over F_q (the image of a Word under a coding).
using CodedWord = std::vector<FieldElement>;

/// Raised when a seed letter does not satisfy sigma(a) = aX with X nonempty.
class NotProlongable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A b-uniform morphism on A_m: every image has length exactly b.
class UniformMorphism {
 public:
  /// Throws std::invalid_argument on ragged images or letters >= m.
  UniformMorphism(std::size_t alphabet_size, std::vector<Word> images);

  std::size_t alphabet_size() const { return images_.size(); }
  std::size_t base() const { return base_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(Letter c) const { return images_.at(c); }
  Letter at(Letter c, std::size_t digit) const { return images_[c][digit]; }

  friend bool operator==(const UniformMorphism&, const UniformMorphism&) = default;

 private:
  std::size_t base_;
  std::vector<Word> images_;
};

/// phi : A_m -> F_q.
class Coding {
 public:
  Coding(FieldRef field, std::vector<FieldElement> table);
  static Coding identity(FieldRef field, std::size_t alphabet_size);
  static Coding from_ints(FieldRef field, const std::vector<std::int64_t>& values);

  const FieldRef& field() const { return field_; }
  std::size_t size() const { return table_.size(); }
  FieldElement operator()(Letter c) const { return table_.at(c); }
  const std::vector<FieldElement>& table() const { return table_; }
  CodedWord apply(const Word& w) const;

 private:
  FieldRef field_;
  std::vector<FieldElement> table_;
};

/// Image of a word; throws std::invalid_argument when a letter is out of range.
Word apply_morphism(const UniformMorphism& sigma, const Word& w);
Word apply_morphism_power(const UniformMorphism& sigma, const Word& w, std::size_t n);

/// sigma1 o sigma2: c -> sigma1(sigma2(c)). Both must share the alphabet.
UniformMorphism compose(const UniformMorphism& sigma1, const UniformMorphism& sigma2);
UniformMorphism morphism_power(const UniformMorphism& sigma, std::size_t n);

/// Letter `index` of sigma^n(c), computed by descending the base-b digits of
/// index without materializing sigma^n(c). Requires index < b^n.
Letter descend(const UniformMorphism& sigma, Letter c, std::uint64_t index, std::size_t n);

struct MorphismDiagnostics {
  bool uniform = true;
  bool alphabet_closed = true;
  bool prolongable = false;
  std::vector<Letter> reachable;  // letters reachable from the seed, ascending
  std::vector<std::string> problems;

  bool ok() const { return uniform && alphabet_closed && prolongable; }
};

/// Checks a raw morphism description without throwing.
MorphismDiagnostics diagnose(std::size_t alphabet_size, const std::vector<Word>& images, Letter seed);
MorphismDiagnostics validate(const UniformMorphism& sigma, Letter seed);

/// Streams the fixed point sigma^inf(a) and its coded image phi(sigma^inf(a)).
///
/// Letter j >= 1 of the fixed point is sigma(w[j / b])[j % b], so the buffer
/// is extended one letter at a time and never exceeds the requested length.
/// Single-writer: extending mutates the buffer.
class SequenceStream {
 public:
  /// Throws NotProlongable (carrying the offending image) or std::invalid_argument.
  SequenceStream(UniformMorphism sigma, Coding coding, Letter seed);

  const UniformMorphism& morphism() const { return sigma_; }
  const Coding& coding() const { return coding_; }
  Letter seed() const { return seed_; }

  Letter letter(std::size_t i);
  FieldElement term(std::size_t i) { return coding_(letter(i)); }
  Word internal_prefix(std::size_t n);
  CodedWord prefix(std::size_t n);

 private:
  void extend(std::size_t n);

  UniformMorphism sigma_;
  Coding coding_;
  Letter seed_;
  Word buffer_;
};

/// First N terms of phi(sigma^inf(a)).
CodedWord fixed_point_prefix(SequenceStream& stream, std::size_t n);

/// Digit-string rendering ("0001"); letters >= 10 are comma separated.
std::string format_word(const Word& w);

}  // namespace laurexp
