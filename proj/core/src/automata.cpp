#include "laurexp/automata.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace laurexp {

Dfao::Dfao(std::size_t base, std::vector<State> delta, std::vector<FieldElement> output)
    : base_(base), delta_(std::move(delta)), output_(std::move(output)) {
  if (base_ < 2) throw std::invalid_argument("automaton base must be >= 2");
  if (output_.empty()) throw std::invalid_argument("automaton needs at least one state");
  if (delta_.size() != output_.size() * base_)
    throw std::invalid_argument("transition table has the wrong size");
  for (State t : delta_)
    if (t >= output_.size()) throw std::invalid_argument("transition to unknown state");
}

State Dfao::run(std::uint64_t i, State from) const {
  std::uint64_t scale = 1;
  while (scale <= i / base_) scale *= base_;
  State q = from;
  if (i == 0) return q;
  for (;; scale /= base_) {
    q = next(q, static_cast<std::size_t>(i / scale));
    i %= scale;
    if (scale == 1) break;
  }
  return q;
}

Dfao build_dfao(const UniformMorphism& sigma, const Coding& coding, Letter seed) {
  if (coding.size() != sigma.alphabet_size())
    throw std::invalid_argument("coding size does not match the alphabet");
  if (seed >= sigma.alphabet_size()) throw std::invalid_argument("seed outside the alphabet");
  if (sigma.base() < 2 || sigma.at(seed, 0) != seed)
    throw NotProlongable("morphism is not prolongable on " + std::to_string(seed) + ": sigma(" +
                         std::to_string(seed) + ") = " + format_word(sigma.image(seed)));
  const std::size_t b = sigma.base();
  std::vector<std::int64_t> id(sigma.alphabet_size(), -1);
  std::vector<Letter> order{seed};
  id[seed] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (Letter x : sigma.image(order[k]))
      if (id[x] < 0) {
        id[x] = static_cast<std::int64_t>(order.size());
        order.push_back(x);
      }
  std::vector<State> delta(order.size() * b);
  std::vector<FieldElement> out(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    out[k] = coding(order[k]);
    for (std::size_t j = 0; j < b; ++j) delta[k * b + j] = static_cast<State>(id[sigma.at(order[k], j)]);
  }
  return Dfao(b, std::move(delta), std::move(out));
}

MinimizedDfao minimize(const Dfao& d) {
  const std::size_t n = d.state_count();
  const std::size_t b = d.base();
  std::vector<State> cls(n);
  {
    std::map<FieldElement, State> by_output;
    for (State q = 0; q < n; ++q) {
      auto [it, _] = by_output.emplace(d.output(q), static_cast<State>(by_output.size()));
      cls[q] = it->second;
    }
  }
  std::size_t count = 0;
  for (auto c : cls) count = std::max<std::size_t>(count, c + 1);
  for (;;) {
    std::map<std::vector<State>, State> signature;
    std::vector<State> next_cls(n);
    for (State q = 0; q < n; ++q) {
      std::vector<State> sig{cls[q]};
      for (std::size_t j = 0; j < b; ++j) sig.push_back(cls[d.next(q, j)]);
      auto [it, _] = signature.emplace(std::move(sig), static_cast<State>(signature.size()));
      next_cls[q] = it->second;
    }
    const std::size_t next_count = signature.size();
    cls = std::move(next_cls);
    if (next_count == count) break;
    count = next_count;
  }
  // Renumber classes in BFS order from the initial state.
  std::vector<std::int64_t> renum(count, -1);
  std::vector<State> rep;  // representative state of each new class
  renum[cls[d.initial()]] = 0;
  rep.push_back(d.initial());
  for (std::size_t k = 0; k < rep.size(); ++k)
    for (std::size_t j = 0; j < b; ++j) {
      const State c = cls[d.next(rep[k], j)];
      if (renum[c] < 0) {
        renum[c] = static_cast<std::int64_t>(rep.size());
        rep.push_back(d.next(rep[k], j));
      }
    }
  const std::size_t e = rep.size();
  std::vector<State> delta(e * b);
  std::vector<FieldElement> out(e);
  for (std::size_t k = 0; k < e; ++k) {
    out[k] = d.output(rep[k]);
    for (std::size_t j = 0; j < b; ++j)
      delta[k * b + j] = static_cast<State>(renum[cls[d.next(rep[k], j)]]);
  }
  std::vector<State> class_of(n);
  for (State q = 0; q < n; ++q)
    class_of[q] = renum[cls[q]] < 0 ? State(e) : static_cast<State>(renum[cls[q]]);
  return {Dfao(b, std::move(delta), std::move(out)), e, std::move(class_of)};
}

KernelDescriptor kernel(const Dfao& d) {
  if (!d.leading_zero_stable())
    throw std::invalid_argument("kernel requires delta(q0, 0) = q0 (leading-zero stability)");
  const std::size_t b = d.base();
  const std::size_t n = d.state_count();
  // Reachable states from q0.
  std::vector<bool> reach(n, false);
  std::deque<State> queue{d.initial()};
  reach[d.initial()] = true;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < b; ++j)
      if (!reach[d.next(q, j)]) {
        reach[d.next(q, j)] = true;
        queue.push_back(d.next(q, j));
      }
  }
  auto key_of = [&](const std::vector<FieldElement>& psi) {
    std::vector<FieldElement> k;
    for (State q = 0; q < n; ++q)
      if (reach[q]) k.push_back(psi[q]);
    return k;
  };
  KernelDescriptor kd;
  std::map<std::vector<FieldElement>, std::size_t> seen;
  kd.elements.push_back({d.outputs(), 0, 0});
  seen.emplace(key_of(d.outputs()), 0);
  for (std::size_t k = 0; k < kd.elements.size(); ++k) {
    for (std::size_t r = 0; r < b; ++r) {
      const KernelElement& cur = kd.elements[k];
      std::vector<FieldElement> psi(n);
      for (State q = 0; q < n; ++q) psi[q] = cur.values[d.next(q, r)];
      if (!seen.emplace(key_of(psi), kd.elements.size()).second) continue;
      // Prepending digit r to a level-n word w gives residue r * b^n + [w].
      std::uint64_t scale = 1;
      for (std::uint32_t i = 0; i < cur.level; ++i) scale *= b;
      KernelElement next{std::move(psi), cur.level + 1, r * scale + cur.residue};
      kd.elements.push_back(std::move(next));
    }
  }
  return kd;
}

}  // namespace laurexp
