#pragma once

#include <cstdint>
#include <vector>

#include "laurexp/words.hpp"

namespace laurexp {

using State = std::uint32_t;

/// Deterministic finite automaton with output reading base-b digits most
/// significant first. State 0 is the initial state.
class Dfao {
 public:
  /// `delta` is row-major: delta[q * base + digit]. Throws std::invalid_argument
  /// on out-of-range targets or a table of the wrong size.
  Dfao(std::size_t base, std::vector<State> delta, std::vector<FieldElement> output);

  std::size_t base() const { return base_; }
  std::size_t state_count() const { return output_.size(); }
  State initial() const { return 0; }
  State next(State q, std::size_t digit) const { return delta_[q * base_ + digit]; }
  FieldElement output(State q) const { return output_[q]; }
  const std::vector<State>& transitions() const { return delta_; }
  const std::vector<FieldElement>& outputs() const { return output_; }

  /// State reached from `from` on the MSD-first base-b digits of i.
  State run(std::uint64_t i, State from = 0) const;
  /// a_i = output(run(i)).
  FieldElement evaluate(std::uint64_t i) const { return output_[run(i)]; }
  bool leading_zero_stable() const { return next(initial(), 0) == initial(); }

  friend bool operator==(const Dfao&, const Dfao&) = default;

 private:
  std::size_t base_;
  std::vector<State> delta_;
  std::vector<FieldElement> output_;
};

/// Cobham's construction: states are the letters reachable from the seed
/// (numbered in BFS order, seed first), delta(c, j) = sigma(c)[j], output = phi.
/// Throws NotProlongable when sigma(a) does not start with a.
Dfao build_dfao(const UniformMorphism& sigma, const Coding& coding, Letter seed);

struct MinimizedDfao {
  Dfao automaton;
  std::size_t state_count;  // e
  /// Class of each original state.
  std::vector<State> class_of;
};

/// Moore partition refinement over (output, successor classes). States of the
/// result are numbered in BFS order from the initial state.
MinimizedDfao minimize(const Dfao& d);

struct KernelElement {
  /// Output function on the automaton's states: the subsequence is
  /// i -> values[run(i)].
  std::vector<FieldElement> values;
  /// Witness: the element is (a_{b^n i + r})_{i >= 0}.
  std::uint32_t level = 0;
  std::uint64_t residue = 0;
};

struct KernelDescriptor {
  std::vector<KernelElement> elements;  // BFS order; elements[0] is the sequence itself
  std::size_t size() const { return elements.size(); }
};

/// Exact b-kernel: breadth-first closure of the output function under
/// psi -> psi o delta(., r). Equality of output functions on reachable states is
/// equality of subsequences because all elements share delta and q0.
/// Throws std::invalid_argument when delta(q0, 0) != q0.
KernelDescriptor kernel(const Dfao& d);

}  // namespace laurexp
