#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <span>
#include <vector>

#include "polyad/alphabet.hpp"

namespace polyad {

// Word exponents are arbitrary-precision so that powers like u^n or a^(2-n)
// never overflow, whatever the arity.
using Int = boost::multiprecision::cpp_int;

struct Run {
  int gen;
  Int exp;

  bool operator==(const Run&) const = default;
};

// A freely reduced word over an alphabet, stored as runs of
// (generator index, nonzero exponent) with adjacent runs on distinct
// generators. The empty run list is the identity. Words are immutable
// values; all operations return fresh canonical words.
class Word {
 public:
  static Word identity(AlphabetRef alphabet);

  // exp == 0 yields the identity.
  static Word generator(AlphabetRef alphabet, int index, Int exp = 1);

  // Canonicalizes an arbitrary run list: drops zero exponents, merges and
  // cancels adjacent runs. Validates generator indices.
  static Word reduce(AlphabetRef alphabet, std::span<const Run> raw);

  const AlphabetRef& alphabet() const noexcept { return alphabet_; }
  const std::vector<Run>& runs() const noexcept { return runs_; }
  bool is_identity() const noexcept { return runs_.empty(); }

  // Number of letters (sum of |exponent| over runs).
  Int length() const;

  // Exponent sum; the homomorphism onto Z sending every generator to 1.
  Int ht() const;

  bool operator==(const Word& other) const { return runs_ == other.runs_; }

  // Lexicographic on runs; a total order so words can key maps and sets.
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  Word(AlphabetRef alphabet, std::vector<Run> canonical)
      : alphabet_(std::move(alphabet)), runs_(std::move(canonical)) {}

  AlphabetRef alphabet_;
  std::vector<Run> runs_;
};

Word concat(const Word& a, const Word& b);
Word invert(const Word& a);
Word power(const Word& a, const Int& e);
Int ht(const Word& w);

}  // namespace polyad
