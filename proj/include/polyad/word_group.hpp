#pragma once

#include "polyad/word.hpp"

namespace polyad {

// A group of words with the translated product a * b = a·e^-1·b, where e is
// a fixed unit word. The unit is the identity and inversion is e·w^-1·e.
// With the empty unit this is the plain free group on the alphabet.
//
// carrier_modulus restricts the carrier to words with ht ≡ ht(unit) modulo
// the modulus (modulus 1 means all words). The carrier is closed under the
// translated product, and such a group is free: via w -> w·e^-1 it is
// isomorphic to the kernel of the height residue map, of index
// carrier_modulus in the ambient free group, so its rank is
// m·(r-1)+1 for modulus m over rank r (plain rank r when m = 1).
class WordGroup {
 public:
  WordGroup(AlphabetRef alphabet, Word unit, long carrier_modulus = 1);

  // The plain free group on `alphabet`.
  static WordGroup plain(AlphabetRef alphabet);

  const AlphabetRef& alphabet() const noexcept { return alphabet_; }
  const Word& unit() const noexcept { return unit_; }
  long carrier_modulus() const noexcept { return modulus_; }
  bool is_plain() const { return unit_.is_identity() && modulus_ == 1; }

  bool in_carrier(const Word& w) const;
  void require_carrier(const Word& w) const;

  const Word& identity() const noexcept { return unit_; }
  Word mul(const Word& a, const Word& b) const;
  Word inverse(const Word& w) const;
  Word pow(const Word& w, long e) const;

  long rank() const;

  bool operator==(const WordGroup& other) const {
    return same_alphabet(alphabet_, other.alphabet_) && unit_ == other.unit_ &&
           modulus_ == other.modulus_;
  }

 private:
  AlphabetRef alphabet_;
  Word unit_;
  long modulus_;
};

}  // namespace polyad
