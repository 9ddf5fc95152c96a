#include "polyad/word.hpp"

namespace polyad {

Word Word::identity(AlphabetRef alphabet) {
  return Word(std::move(alphabet), {});
}

Word Word::generator(AlphabetRef alphabet, int index, Int exp) {
  if (index < 0 || index >= alphabet->size()) {
    throw Error("generator index " + std::to_string(index) +
                " out of range for alphabet of size " +
                std::to_string(alphabet->size()));
  }
  if (exp == 0) {
    return identity(std::move(alphabet));
  }
  std::vector<Run> runs{{index, std::move(exp)}};
  return Word(std::move(alphabet), std::move(runs));
}

Word Word::reduce(AlphabetRef alphabet, std::span<const Run> raw) {
  std::vector<Run> out;
  out.reserve(raw.size());
  for (const Run& r : raw) {
    if (r.gen < 0 || r.gen >= alphabet->size()) {
      throw Error("generator index " + std::to_string(r.gen) +
                  " out of range for alphabet of size " +
                  std::to_string(alphabet->size()));
    }
    if (r.exp == 0) {
      continue;
    }
    if (!out.empty() && out.back().gen == r.gen) {
      out.back().exp += r.exp;
      if (out.back().exp == 0) {
        out.pop_back();
      }
    } else {
      out.push_back(r);
    }
  }
  return Word(std::move(alphabet), std::move(out));
}

Int Word::length() const {
  Int total = 0;
  for (const Run& r : runs_) {
    total += abs(r.exp);
  }
  return total;
}

Int Word::ht() const {
  Int total = 0;
  for (const Run& r : runs_) {
    total += r.exp;
  }
  return total;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  const auto& a = runs_;
  const auto& b = other.runs_;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].gen != b[i].gen) {
      return a[i].gen <=> b[i].gen;
    }
    if (a[i].exp != b[i].exp) {
      return a[i].exp < b[i].exp ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
    }
  }
  return a.size() <=> b.size();
}

Word concat(const Word& a, const Word& b) {
  if (!same_alphabet(a.alphabet(), b.alphabet())) {
    throw Error("alphabet mismatch in concat");
  }
  std::vector<Run> raw;
  raw.reserve(a.runs().size() + b.runs().size());
  raw.insert(raw.end(), a.runs().begin(), a.runs().end());
  raw.insert(raw.end(), b.runs().begin(), b.runs().end());
  return Word::reduce(a.alphabet(), raw);
}

Word invert(const Word& a) {
  std::vector<Run> runs(a.runs().rbegin(), a.runs().rend());
  for (Run& r : runs) {
    r.exp = -r.exp;
  }
  return Word::reduce(a.alphabet(), runs);
}

Word power(const Word& a, const Int& e) {
  if (e == 0 || a.is_identity()) {
    return Word::identity(a.alphabet());
  }
  if (e < 0) {
    return power(invert(a), -e);
  }
  if (a.runs().size() == 1) {
    const Run& r = a.runs().front();
    return Word::generator(a.alphabet(), r.gen, r.exp * e);
  }
  // Square and multiply; reduction telescopes conjugates as it goes, so
  // (p c p^-1)^e costs |c|·e, not |a|·e.
  Word result = Word::identity(a.alphabet());
  Word base = a;
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) {
      result = concat(result, base);
    }
    k >>= 1;
    if (k > 0) {
      base = concat(base, base);
    }
  }
  return result;
}

Int ht(const Word& w) { return w.ht(); }

}  // namespace polyad
