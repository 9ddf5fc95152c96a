#pragma once

#include <vector>

#include "polyad/word.hpp"

namespace polyad {

// A homomorphism of free groups, given by one image word per domain
// generator and extended by substitution.
class Homomorphism {
 public:
  Homomorphism(AlphabetRef domain, AlphabetRef codomain,
               std::vector<Word> images);

  static Homomorphism identity(const AlphabetRef& alphabet);

  // x |-> g x g^-1 on the alphabet of g.
  static Homomorphism conjugation(const Word& g);

  const AlphabetRef& domain() const noexcept { return domain_; }
  const AlphabetRef& codomain() const noexcept { return codomain_; }
  const Word& image(int i) const { return images_.at(i); }
  const std::vector<Word>& images() const noexcept { return images_; }

  bool operator==(const Homomorphism& other) const;

 private:
  AlphabetRef domain_;
  AlphabetRef codomain_;
  std::vector<Word> images_;
};

// Substitutes images for generators and reduces.
Word apply(const Homomorphism& h, const Word& w);

// outer after inner.
Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);

// True when h fixes every generator, i.e. h is the identity map.
bool fixes_generators(const Homomorphism& h);

// h applied k times to w (k >= 0).
Word apply_iterated(const Homomorphism& h, const Word& w, int k);

}  // namespace polyad
