#include "polyad/free_polyadic.hpp"

#include <algorithm>

namespace polyad {

Word ExtractedHg::eta(const Word& w) const {
  return concat(w, triple.base().unit());
}

Word ExtractedHg::eta_inv(const Word& w) const {
  return concat(w, invert(triple.base().unit()));
}

FreePolyadicGroup::FreePolyadicGroup(int n, AlphabetRef alphabet)
    : n_(n),
      alphabet_(std::move(alphabet)),
      u_(Word::generator(alphabet_, 0)) {
  if (n_ < 3) {
    throw Error("arity must be at least 3");
  }
}

bool FreePolyadicGroup::in_carrier(const Word& w) const {
  if (!same_alphabet(w.alphabet(), alphabet_)) {
    return false;
  }
  return (w.ht() - 1) % (n_ - 1) == 0;
}

void FreePolyadicGroup::require_carrier(const Word& w) const {
  if (!same_alphabet(w.alphabet(), alphabet_)) {
    throw Error("word is not over the group's alphabet");
  }
  if (!in_carrier(w)) {
    throw Error("word has height " + w.ht().str() + " ≢ 1 mod " +
                std::to_string(n_ - 1) + "; not a carrier element");
  }
}

Word FreePolyadicGroup::f(std::span<const Word> args) const {
  if (static_cast<int>(args.size()) != n_) {
    throw Error("expected " + std::to_string(n_) + " arguments, got " +
                std::to_string(args.size()));
  }
  Word acc = Word::identity(alphabet_);
  for (const Word& w : args) {
    require_carrier(w);
    acc = concat(acc, w);
  }
  return acc;
}

Word FreePolyadicGroup::skew(const Word& w) const {
  require_carrier(w);
  return power(w, 2 - n_);
}

PostCover FreePolyadicGroup::post_cover() const {
  CosetMap map = CosetMap::canonical(alphabet_, n_);
  Transversal reps = schreier_transversal(map);
  return PostCover{alphabet_, n_, std::move(map), std::move(reps)};
}

BasisPipeline FreePolyadicGroup::basis_pipeline() const {
  BasisPipeline p;
  CosetMap map = CosetMap::canonical(alphabet_, n_);
  Transversal reps = schreier_transversal(map);
  p.kernel_basis = schreier_basis(map, reps);

  // w -> w·u carries the Schreier basis of H to a basis of the coset group
  // (G,∘).
  p.shifted_basis.reserve(p.kernel_basis.size());
  for (const Word& w : p.kernel_basis) {
    p.shifted_basis.push_back(concat(w, u_));
  }

  // One Nielsen step in (G,∘): elements ending in a positive u run (the
  // images of the representatives' boundary generators) are multiplied by
  // the ∘-inverse of u^n, turning u^(n-2)·v·u into u^(n-2)·v·u^-(n-2).
  const Word b = power(u_, n_);
  WordGroup circle(alphabet_, u_, n_ - 1);
  const Word b_circle_inv = circle.inverse(b);
  p.orbit_basis.reserve(p.shifted_basis.size());
  for (const Word& w : p.shifted_basis) {
    if (w != b && !w.runs().empty() && w.runs().back().gen == 0 &&
        w.runs().back().exp > 0) {
      p.orbit_basis.push_back(circle.mul(w, b_circle_inv));
    } else {
      p.orbit_basis.push_back(w);
    }
  }

  // Self-check: as a set, the result must be {u^n} ∪ {u^i v_j u^-i}.
  std::vector<Word> expected{b};
  for (int j = 1; j < alphabet_->size(); ++j) {
    Word v = Word::generator(alphabet_, j);
    for (int i = 0; i <= n_ - 2; ++i) {
      expected.push_back(concat(concat(power(u_, i), v), power(u_, -i)));
    }
  }
  std::vector<Word> got = p.orbit_basis;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  if (got != expected) {
    throw Error("basis pipeline produced an unexpected final set");
  }
  return p;
}

ExtractedHg FreePolyadicGroup::extract_hg() const {
  WordGroup base(alphabet_, u_, n_ - 1);
  Homomorphism theta = Homomorphism::conjugation(u_);
  Homomorphism theta_inv = Homomorphism::conjugation(invert(u_));
  Word b = power(u_, n_);
  HgTriple triple(std::move(base), n_, std::move(theta), std::move(theta_inv),
                  std::move(b));
  return ExtractedHg{std::move(triple), basis_pipeline()};
}

Homomorphism FreePolyadicGroup::cover_extend(const AlphabetRef& target,
                                             std::vector<Word> images) const {
  if (static_cast<int>(images.size()) != alphabet_->size()) {
    throw Error("expected " + std::to_string(alphabet_->size()) +
                " images, got " + std::to_string(images.size()));
  }
  // The generator map must land in the target structure's carrier, or the
  // extension would not respect the n-ary products.
  for (std::size_t i = 0; i < images.size(); ++i) {
    if ((ht(images[i]) - 1) % (n_ - 1) != 0) {
      throw Error("image of " + alphabet_->name(static_cast<int>(i)) +
                  " has height " + ht(images[i]).str() + " ≢ 1 mod " +
                  std::to_string(n_ - 1));
    }
  }
  return Homomorphism(alphabet_, target, std::move(images));
}

}  // namespace polyad
