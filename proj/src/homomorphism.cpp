#include "polyad/homomorphism.hpp"

namespace polyad {

Homomorphism::Homomorphism(AlphabetRef domain, AlphabetRef codomain,
                           std::vector<Word> images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != domain_->size()) {
    throw Error("homomorphism needs one image per domain generator, got " +
                std::to_string(images_.size()) + " for " +
                std::to_string(domain_->size()));
  }
  for (const Word& w : images_) {
    if (!same_alphabet(w.alphabet(), codomain_)) {
      throw Error("homomorphism image over the wrong alphabet");
    }
  }
}

Homomorphism Homomorphism::identity(const AlphabetRef& alphabet) {
  std::vector<Word> images;
  images.reserve(alphabet->size());
  for (int i = 0; i < alphabet->size(); ++i) {
    images.push_back(Word::generator(alphabet, i));
  }
  return Homomorphism(alphabet, alphabet, std::move(images));
}

Homomorphism Homomorphism::conjugation(const Word& g) {
  const AlphabetRef& a = g.alphabet();
  Word g_inv = invert(g);
  std::vector<Word> images;
  images.reserve(a->size());
  for (int i = 0; i < a->size(); ++i) {
    images.push_back(concat(concat(g, Word::generator(a, i)), g_inv));
  }
  return Homomorphism(a, a, std::move(images));
}

bool Homomorphism::operator==(const Homomorphism& other) const {
  return same_alphabet(domain_, other.domain_) &&
         same_alphabet(codomain_, other.codomain_) && images_ == other.images_;
}

Word apply(const Homomorphism& h, const Word& w) {
  if (!same_alphabet(w.alphabet(), h.domain())) {
    throw Error("word is not over the homomorphism's domain alphabet");
  }
  Word out = Word::identity(h.codomain());
  for (const Run& r : w.runs()) {
    out = concat(out, power(h.image(r.gen), r.exp));
  }
  return out;
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (!same_alphabet(inner.codomain(), outer.domain())) {
    throw Error("homomorphisms do not compose: alphabet mismatch");
  }
  std::vector<Word> images;
  images.reserve(inner.images().size());
  for (const Word& w : inner.images()) {
    images.push_back(apply(outer, w));
  }
  return Homomorphism(inner.domain(), outer.codomain(), std::move(images));
}

bool fixes_generators(const Homomorphism& h) {
  if (!same_alphabet(h.domain(), h.codomain())) {
    return false;
  }
  for (int i = 0; i < h.domain()->size(); ++i) {
    if (h.image(i) != Word::generator(h.domain(), i)) {
      return false;
    }
  }
  return true;
}

Word apply_iterated(const Homomorphism& h, const Word& w, int k) {
  Word out = w;
  for (int i = 0; i < k; ++i) {
    out = apply(h, out);
  }
  return out;
}

}  // namespace polyad
