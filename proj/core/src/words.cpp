#include "laurexp/words.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace laurexp {

UniformMorphism::UniformMorphism(std::size_t alphabet_size, std::vector<Word> images)
    : base_(0), images_(std::move(images)) {
  if (alphabet_size == 0) throw std::invalid_argument("alphabet must be nonempty");
  if (images_.size() != alphabet_size)
    throw std::invalid_argument("expected " + std::to_string(alphabet_size) + " images, got " +
                                std::to_string(images_.size()));
  base_ = images_[0].size();
  if (base_ == 0) throw std::invalid_argument("morphism images must be nonempty");
  for (std::size_t c = 0; c < images_.size(); ++c) {
    if (images_[c].size() != base_)
      throw std::invalid_argument("image of letter " + std::to_string(c) + " has length " +
                                  std::to_string(images_[c].size()) + ", expected " +
                                  std::to_string(base_));
    for (Letter x : images_[c])
      if (x >= alphabet_size)
        throw std::invalid_argument("image of letter " + std::to_string(c) +
                                    " contains letter " + std::to_string(x) +
                                    " outside the alphabet");
  }
}

Coding::Coding(FieldRef field, std::vector<FieldElement> table)
    : field_(std::move(field)), table_(std::move(table)) {
  for (auto v : table_)
    if (!field_->contains(v)) throw std::invalid_argument("coding value outside the field");
}

Coding Coding::identity(FieldRef field, std::size_t alphabet_size) {
  std::vector<FieldElement> t;
  for (std::size_t c = 0; c < alphabet_size; ++c) t.push_back(field->from_int(static_cast<std::int64_t>(c)));
  return Coding(std::move(field), std::move(t));
}

Coding Coding::from_ints(FieldRef field, const std::vector<std::int64_t>& values) {
  std::vector<FieldElement> t;
  for (auto v : values) t.push_back(field->from_int(v));
  return Coding(std::move(field), std::move(t));
}

CodedWord Coding::apply(const Word& w) const {
  CodedWord out;
  out.reserve(w.size());
  for (Letter c : w) out.push_back((*this)(c));
  return out;
}

Word apply_morphism(const UniformMorphism& sigma, const Word& w) {
  Word out;
  out.reserve(w.size() * sigma.base());
  for (Letter c : w) {
    if (c >= sigma.alphabet_size())
      throw std::invalid_argument("letter " + std::to_string(c) + " outside the alphabet");
    const Word& img = sigma.image(c);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word apply_morphism_power(const UniformMorphism& sigma, const Word& w, std::size_t n) {
  Word out = w;
  for (std::size_t i = 0; i < n; ++i) out = apply_morphism(sigma, out);
  return out;
}

UniformMorphism compose(const UniformMorphism& sigma1, const UniformMorphism& sigma2) {
  if (sigma1.alphabet_size() != sigma2.alphabet_size())
    throw std::invalid_argument("composed morphisms must share the alphabet");
  std::vector<Word> images;
  for (Letter c = 0; c < sigma2.alphabet_size(); ++c)
    images.push_back(apply_morphism(sigma1, sigma2.image(c)));
  return UniformMorphism(sigma1.alphabet_size(), std::move(images));
}

UniformMorphism morphism_power(const UniformMorphism& sigma, std::size_t n) {
  std::vector<Word> images;
  for (Letter c = 0; c < sigma.alphabet_size(); ++c)
    images.push_back(apply_morphism_power(sigma, {c}, n));
  return UniformMorphism(sigma.alphabet_size(), std::move(images));
}

Letter descend(const UniformMorphism& sigma, Letter c, std::uint64_t index, std::size_t n) {
  const std::uint64_t b = sigma.base();
  std::uint64_t scale = 1;
  for (std::size_t i = 1; i < n; ++i) scale *= b;
  for (std::size_t level = n; level > 0; --level) {
    const std::uint64_t digit = index / scale;
    index %= scale;
    c = sigma.at(c, digit);
    if (level > 1) scale /= b;
  }
  return c;
}

MorphismDiagnostics diagnose(std::size_t alphabet_size, const std::vector<Word>& images, Letter seed) {
  MorphismDiagnostics d;
  if (images.size() != alphabet_size) {
    d.uniform = false;
    d.problems.push_back("expected " + std::to_string(alphabet_size) + " images, got " +
                         std::to_string(images.size()));
    return d;
  }
  const std::size_t b = images.empty() ? 0 : images[0].size();
  for (std::size_t c = 0; c < images.size(); ++c) {
    if (images[c].size() != b) {
      d.uniform = false;
      d.problems.push_back("image of " + std::to_string(c) + " has length " +
                           std::to_string(images[c].size()) + ", expected " + std::to_string(b));
    }
    for (Letter x : images[c])
      if (x >= alphabet_size) {
        d.alphabet_closed = false;
        d.problems.push_back("image of " + std::to_string(c) + " uses letter " +
                             std::to_string(x) + " outside A_" + std::to_string(alphabet_size));
        break;
      }
  }
  if (seed >= alphabet_size) {
    d.problems.push_back("seed " + std::to_string(seed) + " outside the alphabet");
    return d;
  }
  const Word& img = images[seed];
  if (img.size() >= 2 && img[0] == seed) {
    d.prolongable = true;
  } else {
    d.problems.push_back("not prolongable on " + std::to_string(seed) + ": sigma(" +
                         std::to_string(seed) + ") = " + format_word(img));
  }
  std::vector<bool> seen(alphabet_size, false);
  std::deque<Letter> queue{seed};
  seen[seed] = true;
  while (!queue.empty()) {
    Letter c = queue.front();
    queue.pop_front();
    for (Letter x : images[c])
      if (x < alphabet_size && !seen[x]) {
        seen[x] = true;
        queue.push_back(x);
      }
  }
  for (Letter c = 0; c < alphabet_size; ++c)
    if (seen[c]) d.reachable.push_back(c);
  return d;
}

MorphismDiagnostics validate(const UniformMorphism& sigma, Letter seed) {
  return diagnose(sigma.alphabet_size(), sigma.images(), seed);
}

SequenceStream::SequenceStream(UniformMorphism sigma, Coding coding, Letter seed)
    : sigma_(std::move(sigma)), coding_(std::move(coding)), seed_(seed) {
  if (coding_.size() != sigma_.alphabet_size())
    throw std::invalid_argument("coding size does not match the alphabet");
  if (seed_ >= sigma_.alphabet_size()) throw std::invalid_argument("seed outside the alphabet");
  const Word& img = sigma_.image(seed_);
  if (sigma_.base() < 2 || img[0] != seed_)
    throw NotProlongable("morphism is not prolongable on " + std::to_string(seed_) + ": sigma(" +
                         std::to_string(seed_) + ") = " + format_word(img));
  buffer_.push_back(seed_);
}

void SequenceStream::extend(std::size_t n) {
  const std::size_t b = sigma_.base();
  buffer_.reserve(n);
  while (buffer_.size() < n) {
    const std::size_t j = buffer_.size();
    buffer_.push_back(sigma_.at(buffer_[j / b], j % b));
  }
}

Letter SequenceStream::letter(std::size_t i) {
  if (i >= buffer_.size()) extend(i + 1);
  return buffer_[i];
}

Word SequenceStream::internal_prefix(std::size_t n) {
  extend(n);
  return Word(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(n));
}

CodedWord SequenceStream::prefix(std::size_t n) {
  extend(n);
  CodedWord out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(coding_(buffer_[i]));
  return out;
}

CodedWord fixed_point_prefix(SequenceStream& stream, std::size_t n) { return stream.prefix(n); }

std::string format_word(const Word& w) {
  const bool wide = std::any_of(w.begin(), w.end(), [](Letter c) { return c >= 10; });
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i) os << ',';
    os << w[i];
  }
  return os.str();
}

}  // namespace laurexp
