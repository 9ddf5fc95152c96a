#pragma once

#include <vector>

#include "polyad/word.hpp"

namespace polyad {

// Describes the kernel of the homomorphism F(alphabet) -> Z_m sending each
// generator to its residue. The kernel has index m exactly when the residues
// generate Z_m.
class CosetMap {
 public:
  CosetMap(AlphabetRef alphabet, long modulus, std::vector<long> residues);

  // All generators map to 1 mod (n-1): the coset structure of the height
  // homomorphism used throughout the n-ary constructions.
  static CosetMap canonical(AlphabetRef alphabet, int n);

  const AlphabetRef& alphabet() const noexcept { return alphabet_; }
  long modulus() const noexcept { return modulus_; }
  long generator_residue(int i) const { return residues_.at(i); }
  const std::vector<long>& residues() const noexcept { return residues_; }

  long residue(const Word& w) const;

  // Whether the residues generate Z_m, i.e. gcd(m, residues) == 1.
  bool generates() const;

 private:
  AlphabetRef alphabet_;
  long modulus_;
  std::vector<long> residues_;
};

// Coset representatives, indexed by residue. reps[0] is the identity and
// every prefix of a representative is again a representative.
struct Transversal {
  std::vector<Word> reps;
};

// Breadth-first search over positive letters in alphabet order, so
// representatives are minimal-length positive words with lexicographic
// tie-breaking. For the canonical map this yields {1, u, ..., u^(n-2)}.
// Positive letters suffice: any generating set of the finite group Z_m
// generates it as a monoid. Throws if the residues do not generate Z_m.
Transversal schreier_transversal(const CosetMap& c);

// The nontrivial Schreier generators t·x·(rep(t·x))^-1, enumerated over
// representatives in residue order, then generators in alphabet order.
// For a kernel of index m in rank r these are m(r-1)+1 words and form a
// basis of the kernel.
std::vector<Word> schreier_basis(const CosetMap& c, const Transversal& t);

// Rewrites w as a word over the Schreier generators; empty result for
// transversal representatives themselves. Throws if w is not in the kernel.
// basis_alphabet must have one name per schreier_basis element.
Word schreier_rewrite(const CosetMap& c, const Transversal& t,
                      const AlphabetRef& basis_alphabet, const Word& w);

}  // namespace polyad
