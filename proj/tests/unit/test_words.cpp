#include <gtest/gtest.h>

#include <random>

#include "laurexp/words.hpp"
#include "oracles.hpp"

using namespace laurexp;

namespace {

std::string digits(const CodedWord& w) {
  std::string s;
  for (const auto c : w) s += static_cast<char>('0' + c.code);
  return s;
}

SequenceStream stream(std::uint32_t p, const std::vector<Word>& images, const std::vector<std::int64_t>& coding) {
  const auto F = Field::prime(p);
  return SequenceStream(UniformMorphism(images.size(), images), Coding::from_ints(F, coding), 0);
}

const std::vector<Word> kEx1 = {{0, 0, 0, 1}, {1, 0, 0, 1}};
const std::vector<Word> kEx2 = {{0, 0, 0, 0, 0, 1, 2, 2}, {1, 0, 1, 2, 0, 0, 1, 1}, {1, 2, 1, 2, 0, 0, 2, 1}};
const std::vector<Word> kEx3 = {{0, 1, 0}, {1, 0, 2}, {1, 2, 2}};
const std::vector<Word> kEx4 = {{0, 0, 0, 4, 3}, {1, 3, 0, 4, 2}, {1, 4, 2, 0, 1}, {3, 2, 4, 1, 1}, {0, 0, 1, 4, 4}};
const std::vector<Word> kThueMorse = {{0, 1}, {1, 0}};

}  // namespace

TEST(ApplyMorphism, Examples) {
  const UniformMorphism s(2, kEx1);
  EXPECT_EQ(apply_morphism(s, {0, 1}), (Word{0, 0, 0, 1, 1, 0, 0, 1}));
  EXPECT_TRUE(apply_morphism(s, {}).empty());
  EXPECT_EQ(format_word(apply_morphism_power(s, {0}, 2)), "0001000100011001");
}

TEST(ApplyMorphism, RejectsOutOfRangeLetters) {
  const UniformMorphism s(2, kEx1);
  EXPECT_THROW(apply_morphism(s, {0, 2}), std::invalid_argument);
  EXPECT_THROW(UniformMorphism(2, {{0, 1}, {1, 0, 0}}), std::invalid_argument);
  EXPECT_THROW(UniformMorphism(2, {{0, 2}, {1, 0}}), std::invalid_argument);
}

TEST(FixedPointPrefix, Examples) {
  auto ex2 = stream(2, kEx2, {1, 0, 1});
  EXPECT_EQ(digits(fixed_point_prefix(ex2, 11)), "11111011111");
  auto ex3 = stream(3, kEx3, {0, 1, 2});
  EXPECT_EQ(digits(fixed_point_prefix(ex3, 9)), "010102010");
  auto tm = stream(2, kThueMorse, {0, 1});
  EXPECT_EQ(digits(fixed_point_prefix(tm, 11)), "01101001100");
}

TEST(FixedPointPrefix, NotProlongable) {
  const auto F = Field::prime(2);
  try {
    SequenceStream s(UniformMorphism(2, {{1, 0}, {0, 1}}), Coding::identity(F, 2), 0);
    FAIL() << "expected NotProlongable";
  } catch (const NotProlongable& e) {
    EXPECT_NE(std::string(e.what()).find("10"), std::string::npos) << e.what();
  }
}

TEST(Validate, Examples) {
  const auto d1 = validate(UniformMorphism(2, kEx1), 0);
  EXPECT_TRUE(d1.ok());
  EXPECT_EQ(d1.reachable, (std::vector<Letter>{0, 1}));
  const auto d2 = diagnose(1, {{1, 0}}, 0);
  EXPECT_FALSE(d2.prolongable);
  const auto d3 = validate(UniformMorphism(5, kEx4), 0);
  EXPECT_TRUE(d3.ok());
  EXPECT_EQ(d3.reachable, (std::vector<Letter>{0, 1, 2, 3, 4}));
}

TEST(Validate, ReportsRaggedAndOutOfRange) {
  const auto d = diagnose(2, {{0, 1}, {1, 0, 3}}, 0);
  EXPECT_FALSE(d.uniform);
  EXPECT_FALSE(d.alphabet_closed);
  EXPECT_FALSE(d.ok());
  EXPECT_FALSE(d.problems.empty());
}

TEST(WordsProperties, MorphismDistributesOverConcatenation) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t m = 2 + rng() % 3;
    const std::size_t b = 2 + rng() % 3;
    const UniformMorphism s(m, oracle::random_morphism(rng, m, b));
    const Word u = oracle::random_word(rng, m, rng() % 10);
    const Word v = oracle::random_word(rng, m, rng() % 10);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    Word su = apply_morphism(s, u);
    const Word sv = apply_morphism(s, v);
    su.insert(su.end(), sv.begin(), sv.end());
    EXPECT_EQ(apply_morphism(s, uv), su);
  }
}

TEST(WordsProperties, PrefixesAreStable) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t m = 2 + rng() % 3;
    const auto images = oracle::random_morphism(rng, m, 2 + rng() % 3);
    const auto coding = oracle::random_coding(rng, m, 3);
    auto s = stream(3, images, coding);
    const std::size_t n1 = rng() % 200;
    const std::size_t n2 = n1 + rng() % 200;
    const CodedWord a = fixed_point_prefix(s, n2);
    const CodedWord b = fixed_point_prefix(s, n1);
    EXPECT_TRUE(std::equal(b.begin(), b.end(), a.begin()));
    auto fresh = stream(3, images, coding);
    EXPECT_EQ(fixed_point_prefix(fresh, n1), b);
  }
}

TEST(WordsProperties, IteratedSeedIsFixedPointPrefix) {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t m = 2 + rng() % 3;
    const std::size_t b = 2 + rng() % 3;
    const auto images = oracle::random_morphism(rng, m, b);
    auto s = stream(2, images, std::vector<std::int64_t>(m, 0));
    for (std::size_t n = 0; n <= 4; ++n) {
      const Word expanded = oracle::expand(images, {0}, n);
      EXPECT_EQ(s.internal_prefix(expanded.size()), expanded);
      EXPECT_EQ(apply_morphism_power(UniformMorphism(m, images), {0}, n), expanded);
    }
  }
}

TEST(WordsProperties, DescendMatchesExpansion) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t m = 2 + rng() % 3;
    const std::size_t b = 2 + rng() % 3;
    const auto images = oracle::random_morphism(rng, m, b);
    const UniformMorphism s(m, images);
    const Letter c = static_cast<Letter>(rng() % m);
    const Word w = oracle::expand(images, {c}, 4);
    for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(descend(s, c, i, 4), w[i]);
  }
}
