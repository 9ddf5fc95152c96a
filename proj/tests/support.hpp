#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "polyad/hg_triple.hpp"
#include "polyad/parse.hpp"
#include "polyad/word.hpp"

namespace polyad::test {

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

inline Word random_word(std::mt19937& rng, const AlphabetRef& alphabet,
                        int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(0, alphabet->size() - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  int len = len_dist(rng);
  std::vector<Run> raw;
  raw.reserve(len);
  for (int i = 0; i < len; ++i) {
    raw.push_back({gen_dist(rng), sign_dist(rng) ? Int(1) : Int(-1)});
  }
  return Word::reduce(alphabet, raw);
}

// A random word padded with powers of the first generator until its height
// is congruent to 1 mod (n-1).
inline Word random_carrier_word(std::mt19937& rng, const AlphabetRef& alphabet,
                                int n, int max_len) {
  Word w = random_word(rng, alphabet, max_len);
  Int d = (ht(w) - 1) % (n - 1);
  if (d < 0) {
    d += n - 1;
  }
  return concat(w, power(Word::generator(alphabet, 0), -d));
}

// Expands a word into single letters (generator, ±1). Only for short words.
inline std::vector<std::pair<int, int>> letters(const Word& w) {
  std::vector<std::pair<int, int>> out;
  for (const Run& r : w.runs()) {
    int sign = r.exp > 0 ? 1 : -1;
    Int count = r.exp * sign;
    for (Int i = 0; i < count; ++i) {
      out.emplace_back(r.gen, sign);
    }
  }
  return out;
}

// Stack cancellation of adjacent inverse letters, the definition of free
// reduction spelled out one letter at a time.
inline std::vector<std::pair<int, int>> naive_reduce(
    const std::vector<std::pair<int, int>>& in) {
  std::vector<std::pair<int, int>> stack;
  for (const auto& l : in) {
    if (!stack.empty() && stack.back().first == l.first &&
        stack.back().second == -l.second) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack;
}

inline Word word_from_letters(const AlphabetRef& alphabet,
                              const std::vector<std::pair<int, int>>& ls) {
  std::vector<Run> raw;
  raw.reserve(ls.size());
  for (const auto& l : ls) {
    raw.push_back({l.first, Int(l.second)});
  }
  return Word::reduce(alphabet, raw);
}

// Every reduced word of letter-length <= max_len, via strings of letters in
// which no letter is followed by its inverse.
inline std::vector<Word> all_reduced_words(const AlphabetRef& alphabet,
                                           int max_len) {
  std::vector<Word> out;
  std::vector<std::pair<int, int>> current;
  auto walk = [&](auto&& self) -> void {
    out.push_back(word_from_letters(alphabet, current));
    if (static_cast<int>(current.size()) == max_len) {
      return;
    }
    for (int g = 0; g < alphabet->size(); ++g) {
      for (int sign : {1, -1}) {
        if (!current.empty() && current.back().first == g &&
            current.back().second == -sign) {
          continue;
        }
        current.emplace_back(g, sign);
        self(self);
        current.pop_back();
      }
    }
  };
  walk(walk);
  return out;
}

inline std::vector<Word> parse_all(const AlphabetRef& alphabet,
                                   const std::vector<std::string>& texts) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) {
    out.push_back(parse_word(alphabet, t));
  }
  return out;
}

inline std::vector<std::string> render_all(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const Word& w : ws) {
    out.push_back(render(w));
  }
  return out;
}

inline bool same_set(std::vector<Word> a, std::vector<Word> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// A valid triple on the plain free group of rank 1 + (s-1)(n-1) whose
// derived structure is free by construction: theta shifts each t-orbit and
// wraps the last element into a conjugate, exactly the orbit basis
// coordinates of the extracted structure on s letters.
inline HgTriple twisted_shift_triple(int n, int s) {
  std::vector<std::string> names{"b"};
  for (int i = 1; i < s; ++i) {
    for (int j = 0; j <= n - 2; ++j) {
      names.push_back("t" + std::to_string(i) + std::to_string(j));
    }
  }
  AlphabetRef alphabet = make_alphabet(names);
  Word b = Word::generator(alphabet, 0);
  auto t = [&](int i, int j) {
    return Word::generator(alphabet, 1 + (i - 1) * (n - 1) + j);
  };
  std::vector<Word> images{b};
  std::vector<Word> inv_images{b};
  for (int i = 1; i < s; ++i) {
    for (int j = 0; j <= n - 2; ++j) {
      images.push_back(j < n - 2 ? t(i, j + 1)
                                 : concat(concat(b, t(i, 0)), invert(b)));
      inv_images.push_back(j > 0 ? t(i, j - 1)
                                 : concat(concat(invert(b), t(i, n - 2)), b));
    }
  }
  Homomorphism theta(alphabet, alphabet, images);
  Homomorphism theta_inv(alphabet, alphabet, inv_images);
  return HgTriple(WordGroup::plain(alphabet), n, theta, theta_inv, b);
}

// The Cayley table of the symmetric group on three points, elements numbered
// id=0, (12)=1, (13)=2, (23)=3, (123)=4, (132)=5; entry [i][j] = i∘j with
// the left factor applied second.
inline std::vector<int> s3_table() {
  auto compose = [](const std::array<int, 3>& f, const std::array<int, 3>& g) {
    std::array<int, 3> h{};
    for (int x = 0; x < 3; ++x) {
      h[x] = f[g[x]];
    }
    return h;
  };
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<int> table(36, -1);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      auto h = compose(perms[i], perms[j]);
      for (int k = 0; k < 6; ++k) {
        if (perms[k] == h) {
          table[i * 6 + j] = k;
        }
      }
    }
  }
  return table;
}

}  // namespace polyad::test
