#include "oracles.hpp"

#include <set>
#include <stdexcept>

namespace oracle {

Word expand(const Images& images, const Word& w, std::size_t n) {
  Word cur = w;
  for (std::size_t i = 0; i < n; ++i) {
    Word next;
    for (const Letter c : cur) next.insert(next.end(), images.at(c).begin(), images.at(c).end());
    cur = std::move(next);
  }
  return cur;
}

Word fixed_point(const Images& images, Letter seed, std::size_t N) {
  Word cur{seed};
  while (cur.size() < N) {
    const std::size_t before = cur.size();
    cur = expand(images, cur, 1);
    if (cur.size() <= before) throw std::logic_error("fixed point does not grow");
  }
  cur.resize(N);
  return cur;
}

Letter letter_at(const Images& images, Letter seed, std::uint64_t j) {
  const std::uint64_t b = images.at(seed).size();
  std::vector<std::uint64_t> digits;
  for (; j > 0; j /= b) digits.push_back(j % b);
  Letter cur = seed;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) cur = images[cur][*it];
  return cur;
}

std::vector<std::int64_t> code(const Word& w, const std::vector<std::int64_t>& coding) {
  std::vector<std::int64_t> out;
  out.reserve(w.size());
  for (const Letter c : w) out.push_back(coding.at(c));
  return out;
}

std::size_t brute_kernel_size(const Images& images, const std::vector<std::int64_t>& coding, Letter seed,
                              std::size_t terms, std::size_t max_level) {
  const std::uint64_t b = images.at(seed).size();
  auto sample = [&](std::uint64_t bn, std::uint64_t r) {
    std::vector<std::int64_t> sub(terms);
    for (std::size_t i = 0; i < terms; ++i) sub[i] = coding.at(letter_at(images, seed, bn * i + r));
    return sub;
  };
  std::set<std::vector<std::int64_t>> seen{sample(1, 0)};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> frontier{{1, 0}};  // (b^n, r)
  for (std::size_t level = 0; !frontier.empty(); ++level) {
    if (level == max_level) throw std::runtime_error("kernel not closed within the level limit");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> next;
    for (const auto& [bn, r] : frontier)
      for (std::uint64_t d = 0; d < b; ++d)
        if (seen.insert(sample(bn * b, bn * d + r)).second) next.emplace_back(bn * b, bn * d + r);
    frontier = std::move(next);
  }
  return seen.size();
}

std::optional<std::size_t> naive_agreement(const Images& images, const std::vector<std::int64_t>& coding,
                                           Letter seed, const Word& U, const Word& V, std::size_t n,
                                           std::size_t limit) {
  const Word a = fixed_point(images, seed, limit);
  const Word Un = expand(images, U, n);
  const Word Vn = expand(images, V, n);
  for (std::size_t i = 0; i < limit; ++i) {
    const Letter c = i < Un.size() ? Un[i] : Vn[(i - Un.size()) % Vn.size()];
    if (coding.at(c) != coding.at(a[i])) return i;
  }
  return std::nullopt;
}

Polynomial word_poly(const FieldRef& field, const std::vector<std::int64_t>& coded) {
  std::vector<std::int64_t> c(coded.rbegin(), coded.rend());
  return Polynomial::from_ints(field, c);
}

Polynomial word_poly_mod_cyclic(const FieldRef& field, const std::vector<std::int64_t>& coded, std::size_t L) {
  const std::int64_t p = field->characteristic();
  std::vector<std::int64_t> c(L, 0);
  const std::size_t len = coded.size();
  for (std::size_t j = 0; j < len; ++j) c[j % L] = (c[j % L] + coded[len - 1 - j]) % p;
  return Polynomial::from_ints(field, c);
}

std::vector<Polynomial> occurrences(const FieldRef& field, const Word& w, std::size_t m) {
  std::vector<std::vector<std::int64_t>> c(m);
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    const Letter x = w[w.size() - 1 - pos];
    if (c[x].size() <= pos) c[x].resize(pos + 1, 0);
    c[x][pos] = 1;
  }
  std::vector<Polynomial> out;
  for (const auto& v : c) out.push_back(Polynomial::from_ints(field, v));
  return out;
}

std::vector<Polynomial> matrix(const FieldRef& field, const Images& images, std::size_t m) {
  std::vector<Polynomial> out;
  for (const auto& img : images) {
    const auto row = occurrences(field, img, m);
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

namespace {

Polynomial one(const FieldRef& f) { return Polynomial::from_ints(f, {1}); }
Polynomial t_pow(const FieldRef& f, std::size_t k) { return Polynomial::monomial(f, f->one(), k); }

}  // namespace

Approximant approximant(const FieldRef& field, const Images& images, const std::vector<std::int64_t>& coding,
                        const Word& U, const Word& V, std::size_t n) {
  const auto Un = code(expand(images, U, n), coding);
  const auto Vn = code(expand(images, V, n), coding);
  const Polynomial cyc = t_pow(field, Vn.size()) - one(field);
  if (U.empty()) return {word_poly(field, Vn) * t_pow(field, 1), cyc};
  return {word_poly(field, Un) * cyc + word_poly(field, Vn), t_pow(field, Un.size() - 1) * cyc};
}

bool brute_coprime(const FieldRef& field, const Images& images, const std::vector<std::int64_t>& coding,
                   const Word& U, const Word& V, std::size_t n, std::size_t full_gcd_limit) {
  const auto Un = code(expand(images, U, n), coding);
  const auto Vn = code(expand(images, V, n), coding);
  const std::size_t L = Vn.size();
  const std::size_t K = Un.size();
  if (K + L <= full_gcd_limit) {
    const Approximant a = approximant(field, images, coding, U, V, n);
    return laurexp::poly_gcd(a.P, a.Q).degree() == 0;
  }
  const std::uint64_t p = field->characteristic();
  std::size_t lp = V.size();
  while (lp % p == 0) lp /= p;
  // T^{lp} - 1 divides T^L - 1, so P_n mod (T^{lp} - 1) only needs P_{V_n} mod (T^{lp} - 1).
  const Polynomial pv = word_poly_mod_cyclic(field, Vn, lp);
  const Polynomial cyc = t_pow(field, lp) - one(field);
  if (laurexp::poly_gcd(pv % cyc, cyc).degree() != 0) return false;
  if (K == 0 || K == 1) return true;  // no factor T in Q_n
  const std::int64_t pu0 = Un.back();
  const std::int64_t pv0 = Vn.back();
  return ((pv0 - pu0) % static_cast<std::int64_t>(p) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p) != 0;
}

Images random_morphism(std::mt19937_64& rng, std::size_t m, std::size_t b) {
  std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(m - 1));
  Images out(m, Word(b));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < b; ++j) out[i][j] = letter(rng);
  out[0][0] = 0;
  return out;
}

Word random_word(std::mt19937_64& rng, std::size_t m, std::size_t len) {
  std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(m - 1));
  Word w(len);
  for (auto& c : w) c = letter(rng);
  return w;
}

std::vector<std::int64_t> random_coding(std::mt19937_64& rng, std::size_t m, std::uint32_t p) {
  std::uniform_int_distribution<std::int64_t> d(0, p - 1);
  std::vector<std::int64_t> out(m);
  for (auto& c : out) c = d(rng);
  return out;
}

Polynomial random_poly(std::mt19937_64& rng, const FieldRef& field, std::size_t max_degree) {
  std::uniform_int_distribution<std::int64_t> d(0, field->characteristic() - 1);
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<std::int64_t> c(deg(rng) + 1);
  for (auto& x : c) x = d(rng);
  return Polynomial::from_ints(field, c);
}

}  // namespace oracle
