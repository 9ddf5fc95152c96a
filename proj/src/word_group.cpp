#include "polyad/word_group.hpp"

namespace polyad {

WordGroup::WordGroup(AlphabetRef alphabet, Word unit, long carrier_modulus)
    : alphabet_(std::move(alphabet)),
      unit_(std::move(unit)),
      modulus_(carrier_modulus) {
  if (!same_alphabet(unit_.alphabet(), alphabet_)) {
    throw Error("unit word is not over the group's alphabet");
  }
  if (modulus_ < 1) {
    throw Error("carrier modulus must be at least 1");
  }
}

WordGroup WordGroup::plain(AlphabetRef alphabet) {
  Word unit = Word::identity(alphabet);
  return WordGroup(std::move(alphabet), std::move(unit), 1);
}

bool WordGroup::in_carrier(const Word& w) const {
  if (!same_alphabet(w.alphabet(), alphabet_)) {
    return false;
  }
  Int diff = w.ht() - unit_.ht();
  return diff % modulus_ == 0;
}

void WordGroup::require_carrier(const Word& w) const {
  if (!same_alphabet(w.alphabet(), alphabet_)) {
    throw Error("word is not over the group's alphabet");
  }
  if (!in_carrier(w)) {
    throw Error("word has height " + w.ht().str() + ", not congruent to " +
                unit_.ht().str() + " mod " + std::to_string(modulus_));
  }
}

Word WordGroup::mul(const Word& a, const Word& b) const {
  return concat(concat(a, invert(unit_)), b);
}

Word WordGroup::inverse(const Word& w) const {
  return concat(concat(unit_, invert(w)), unit_);
}

Word WordGroup::pow(const Word& w, long e) const {
  if (e < 0) {
    return pow(inverse(w), -e);
  }
  Word acc = identity();
  for (long i = 0; i < e; ++i) {
    acc = mul(acc, w);
  }
  return acc;
}

long WordGroup::rank() const {
  if (modulus_ == 1) {
    return alphabet_->size();
  }
  return modulus_ * (alphabet_->size() - 1) + 1;
}

}  // namespace polyad
