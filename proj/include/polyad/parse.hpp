#pragma once

#include <string>
#include <string_view>

#include "polyad/word.hpp"

namespace polyad {

// Grammar, whitespace separated:
//   word    := "1" | term+
//   term    := NAME ("^" INTEGER)?
//   NAME    := [A-Za-z][A-Za-z0-9]*
//   INTEGER := nonzero signed decimal
// Unknown names and malformed tokens raise ParseError with a 1-based
// byte position.
Word parse_word(const AlphabetRef& alphabet, std::string_view text);

// Inverse of parse_word on canonical words; the identity renders as "1".
std::string render(const Word& w);

// CLI convenience: an alphabet listing the generator names of `text` in
// order of first appearance.
AlphabetRef infer_alphabet(std::string_view text);

}  // namespace polyad
