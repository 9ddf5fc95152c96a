#include "polyad/parse.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace polyad {

namespace {

struct Token {
  std::string text;
  std::size_t position;  // 1-based byte offset
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    tokens.push_back({std::string(text.substr(start, i - start)), start + 1});
  }
  return tokens;
}

// NAME ("^" INTEGER)?  ->  (name, exponent)
std::pair<std::string, Int> split_term(const Token& tok) {
  const std::string& t = tok.text;
  std::size_t caret = t.find('^');
  std::string name = (caret == std::string::npos) ? t : t.substr(0, caret);
  if (!Alphabet::valid_name(name)) {
    throw ParseError("malformed term '" + t + "'", tok.position);
  }
  if (caret == std::string::npos) {
    return {name, 1};
  }
  std::string digits = t.substr(caret + 1);
  std::size_t exp_pos = tok.position + caret + 1;
  std::string_view body = digits;
  if (!body.empty() && body[0] == '-') {
    body.remove_prefix(1);
  }
  if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("malformed exponent in '" + t + "'", exp_pos);
  }
  Int exp(digits);
  if (exp == 0) {
    throw ParseError("zero exponent in '" + t + "'", exp_pos);
  }
  return {name, exp};
}

}  // namespace

Word parse_word(const AlphabetRef& alphabet, std::string_view text) {
  std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) {
    throw ParseError("empty input", 1);
  }
  if (tokens.size() == 1 && tokens[0].text == "1") {
    return Word::identity(alphabet);
  }
  std::vector<Run> raw;
  raw.reserve(tokens.size());
  for (const Token& tok : tokens) {
    if (tok.text == "1") {
      throw ParseError("'1' is only valid as a whole word", tok.position);
    }
    auto [name, exp] = split_term(tok);
    auto index = alphabet->index_of(name);
    if (!index) {
      throw ParseError("unknown generator '" + name + "'", tok.position);
    }
    raw.push_back({*index, std::move(exp)});
  }
  return Word::reduce(alphabet, raw);
}

std::string render(const Word& w) {
  if (w.is_identity()) {
    return "1";
  }
  std::string out;
  bool first = true;
  for (const Run& r : w.runs()) {
    if (!first) {
      out += ' ';
    }
    first = false;
    out += w.alphabet()->name(r.gen);
    if (r.exp != 1) {
      out += '^';
      out += r.exp.str();
    }
  }
  return out;
}

AlphabetRef infer_alphabet(std::string_view text) {
  std::vector<std::string> names;
  for (const Token& tok : tokenize(text)) {
    if (tok.text == "1") {
      continue;
    }
    auto [name, exp] = split_term(tok);
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      names.push_back(name);
    }
  }
  if (names.empty()) {
    names.push_back("u");
  }
  return make_alphabet(std::move(names));
}

}  // namespace polyad
