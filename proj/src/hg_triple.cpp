#include "polyad/hg_triple.hpp"

#include <vector>

namespace polyad {

namespace {

void check_automorphism_pair(const WordGroup& base, const Homomorphism& theta,
                             const Homomorphism& theta_inv) {
  const AlphabetRef& a = base.alphabet();
  if (!same_alphabet(theta.domain(), a) || !same_alphabet(theta.codomain(), a) ||
      !same_alphabet(theta_inv.domain(), a) ||
      !same_alphabet(theta_inv.codomain(), a)) {
    throw Error("theta must map the base alphabet to itself");
  }
  if (!fixes_generators(compose(theta, theta_inv)) ||
      !fixes_generators(compose(theta_inv, theta))) {
    throw Error("theta_inv is not inverse to theta");
  }
  if (apply(theta, base.unit()) != base.unit()) {
    throw Error("theta must fix the group unit");
  }
}

}  // namespace

HgTriple::HgTriple(WordGroup base, int n, Homomorphism theta,
                   Homomorphism theta_inv, Word b)
    : base_(std::move(base)),
      n_(n),
      theta_(std::move(theta)),
      theta_inv_(std::move(theta_inv)),
      b_(std::move(b)) {
  if (n_ < 3) {
    throw Error("arity must be at least 3");
  }
  check_automorphism_pair(base_, theta_, theta_inv_);
  base_.require_carrier(b_);
  if (apply(theta_, b_) != b_) {
    throw Error("theta does not fix b");
  }
  // theta^(n-1) = conjugation by b in (G,*). Both sides are substitution
  // homomorphisms, so agreement on generators settles it.
  const Word b_inv = base_.inverse(b_);
  for (int i = 0; i < base_.alphabet()->size(); ++i) {
    Word x = Word::generator(base_.alphabet(), i);
    Word lhs = apply_theta(x, n_ - 1);
    Word rhs = base_.mul(base_.mul(b_, x), b_inv);
    if (lhs != rhs) {
      throw Error("theta^(n-1) is not conjugation by b (fails on generator " +
                  base_.alphabet()->name(i) + ")");
    }
  }
}

HgTriple HgTriple::derived(AlphabetRef alphabet, int n, Word b) {
  WordGroup base = WordGroup::plain(alphabet);
  Homomorphism id = Homomorphism::identity(alphabet);
  return HgTriple(std::move(base), n, id, id, std::move(b));
}

Word HgTriple::apply_theta(const Word& w, int times) const {
  return apply_iterated(theta_, w, times);
}

Word HgTriple::apply_theta_inv(const Word& w, int times) const {
  return apply_iterated(theta_inv_, w, times);
}

Word HgTriple::eval(std::span<const Word> args) const {
  if (static_cast<int>(args.size()) != n_) {
    throw Error("expected " + std::to_string(n_) + " arguments, got " +
                std::to_string(args.size()));
  }
  for (const Word& x : args) {
    base_.require_carrier(x);
  }
  Word acc = args[0];
  for (int i = 1; i < n_; ++i) {
    acc = base_.mul(acc, apply_theta(args[i], i));
  }
  return base_.mul(acc, b_);
}

Word HgTriple::skew(const Word& x) const {
  base_.require_carrier(x);
  Word p = x;
  Word image = x;
  for (int i = 1; i <= n_ - 2; ++i) {
    image = apply_theta(image);
    p = base_.mul(p, image);
  }
  return base_.mul(base_.mul(base_.inverse(b_), base_.inverse(p)), x);
}

Word HgTriple::solve(int position, std::span<const Word> coeffs,
                     const Word& d) const {
  if (position < 1 || position > n_) {
    throw Error("solve position must be between 1 and " + std::to_string(n_));
  }
  if (static_cast<int>(coeffs.size()) != n_ - 1) {
    throw Error("solve needs " + std::to_string(n_ - 1) + " coefficients");
  }
  for (const Word& w : coeffs) {
    base_.require_carrier(w);
  }
  base_.require_carrier(d);
  // f(a_1,..,x,..,a_n) = A * theta^(p-1)(x) * B * b with A the product of
  // the images before x and B the product after. Isolate and pull back.
  Word prefix = base_.identity();
  for (int i = 1; i < position; ++i) {
    prefix = base_.mul(prefix, apply_theta(coeffs[i - 1], i - 1));
  }
  Word suffix = base_.identity();
  for (int i = position + 1; i <= n_; ++i) {
    suffix = base_.mul(suffix, apply_theta(coeffs[i - 2], i - 1));
  }
  Word isolated = base_.mul(
      base_.mul(base_.mul(base_.inverse(prefix), d), base_.inverse(b_)),
      base_.inverse(suffix));
  return apply_theta_inv(isolated, position - 1);
}

}  // namespace polyad
