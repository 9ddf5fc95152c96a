#pragma once

#include <span>

#include "polyad/homomorphism.hpp"
#include "polyad/word_group.hpp"

namespace polyad {

// An automorphism theta and an element b over a word group (G,*), pinned to
// an arity n >= 3, with
//   theta(b) = b          and
//   theta^(n-1)(x) = b * x * b^-1   for every x,
// so that f(x_1,...,x_n) = x_1 * theta(x_2) * ... * theta^(n-1)(x_n) * b is
// an n-ary group (the derived structure). Both conditions are checked on
// generators at construction; invalid triples never construct. theta is
// given by substitution images together with an explicit inverse, and must
// fix the group's unit so it respects the translated product.
class HgTriple {
 public:
  using element_type = Word;

  HgTriple(WordGroup base, int n, Homomorphism theta, Homomorphism theta_inv,
           Word b);

  // theta = id, the given b: the b-derived structure on the plain free
  // group. b must be central for n-ary associativity, which in a free group
  // means b = 1 unless the rank is 1; validation enforces the group laws
  // either way.
  static HgTriple derived(AlphabetRef alphabet, int n, Word b);

  const WordGroup& base() const noexcept { return base_; }
  int arity() const noexcept { return n_; }
  const Homomorphism& theta() const noexcept { return theta_; }
  const Homomorphism& theta_inv() const noexcept { return theta_inv_; }
  const Word& b() const noexcept { return b_; }

  Word apply_theta(const Word& w, int times = 1) const;
  Word apply_theta_inv(const Word& w, int times = 1) const;

  // f(x_1,...,x_n); all arguments must lie in the base carrier.
  Word eval(std::span<const Word> args) const;

  // The unique y with f(x,...,x,y) = x, in closed form:
  //   y = b^-1 * P^-1 * x,  P = x * theta(x) * ... * theta^(n-2)(x).
  Word skew(const Word& x) const;

  // The unique x with f(a_1,...,a_{i-1}, x, a_{i+1},...,a_n) = d, position
  // 1-based, coeffs listing the n-1 fixed arguments in order.
  Word solve(int position, std::span<const Word> coeffs, const Word& d) const;

 private:
  WordGroup base_;
  int n_;
  Homomorphism theta_;
  Homomorphism theta_inv_;
  Word b_;
};

}  // namespace polyad
