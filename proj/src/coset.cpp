#include "polyad/coset.hpp"

#include <deque>
#include <numeric>

namespace polyad {

CosetMap::CosetMap(AlphabetRef alphabet, long modulus,
                   std::vector<long> residues)
    : alphabet_(std::move(alphabet)),
      modulus_(modulus),
      residues_(std::move(residues)) {
  if (modulus_ < 1) {
    throw Error("coset modulus must be at least 1");
  }
  if (static_cast<int>(residues_.size()) != alphabet_->size()) {
    throw Error("coset map needs one residue per generator");
  }
  for (long& r : residues_) {
    r = ((r % modulus_) + modulus_) % modulus_;
  }
}

CosetMap CosetMap::canonical(AlphabetRef alphabet, int n) {
  if (n < 3) {
    throw Error("arity must be at least 3");
  }
  std::vector<long> residues(alphabet->size(), 1 % (n - 1));
  return CosetMap(std::move(alphabet), n - 1, std::move(residues));
}

long CosetMap::residue(const Word& w) const {
  if (!same_alphabet(w.alphabet(), alphabet_)) {
    throw Error("word is not over the coset map's alphabet");
  }
  Int acc = 0;
  for (const Run& r : w.runs()) {
    acc += (r.exp % modulus_) * residues_[r.gen];
  }
  Int m = modulus_;
  Int res = ((acc % m) + m) % m;
  return static_cast<long>(res);
}

bool CosetMap::generates() const {
  long g = modulus_;
  for (long r : residues_) {
    g = std::gcd(g, r);
  }
  return g == 1;
}

Transversal schreier_transversal(const CosetMap& c) {
  const long m = c.modulus();
  const AlphabetRef& a = c.alphabet();
  std::vector<std::optional<Word>> reps(m);
  reps[0] = Word::identity(a);
  std::deque<long> queue{0};
  long found = 1;
  while (!queue.empty() && found < m) {
    long r = queue.front();
    queue.pop_front();
    for (int g = 0; g < a->size(); ++g) {
      long next = (r + c.generator_residue(g)) % m;
      if (!reps[next]) {
        reps[next] = concat(*reps[r], Word::generator(a, g));
        queue.push_back(next);
        ++found;
      }
    }
  }
  if (found < m) {
    throw Error("residues do not generate Z_" + std::to_string(m) +
                "; the subgroup would not have index " + std::to_string(m));
  }
  Transversal t;
  t.reps.reserve(m);
  for (auto& rep : reps) {
    t.reps.push_back(std::move(*rep));
  }
  return t;
}

namespace {

void check_transversal(const CosetMap& c, const Transversal& t) {
  if (static_cast<long>(t.reps.size()) != c.modulus()) {
    throw Error("transversal size does not match the modulus");
  }
  for (long i = 0; i < c.modulus(); ++i) {
    if (c.residue(t.reps[i]) != i) {
      throw Error("transversal representative has the wrong residue");
    }
  }
  if (!t.reps[0].is_identity()) {
    throw Error("transversal must represent residue 0 by the identity");
  }
}

}  // namespace

std::vector<Word> schreier_basis(const CosetMap& c, const Transversal& t) {
  check_transversal(c, t);
  const AlphabetRef& a = c.alphabet();
  std::vector<Word> basis;
  for (long r = 0; r < c.modulus(); ++r) {
    for (int g = 0; g < a->size(); ++g) {
      long next = (r + c.generator_residue(g)) % c.modulus();
      Word gen = concat(concat(t.reps[r], Word::generator(a, g)),
                        invert(t.reps[next]));
      if (!gen.is_identity()) {
        basis.push_back(std::move(gen));
      }
    }
  }
  return basis;
}

Word schreier_rewrite(const CosetMap& c, const Transversal& t,
                      const AlphabetRef& basis_alphabet, const Word& w) {
  check_transversal(c, t);
  const AlphabetRef& a = c.alphabet();
  const long m = c.modulus();
  // index of the Schreier generator at (residue, generator); -1 when trivial
  std::vector<std::vector<int>> table(m, std::vector<int>(a->size(), -1));
  int count = 0;
  for (long r = 0; r < m; ++r) {
    for (int g = 0; g < a->size(); ++g) {
      long next = (r + c.generator_residue(g)) % m;
      Word gen = concat(concat(t.reps[r], Word::generator(a, g)),
                        invert(t.reps[next]));
      if (!gen.is_identity()) {
        table[r][g] = count++;
      }
    }
  }
  if (basis_alphabet->size() != count) {
    throw Error("basis alphabet size does not match the Schreier basis");
  }
  if (c.residue(w) != 0) {
    throw Error("word is not in the kernel subgroup");
  }
  std::vector<Run> out;
  long r = 0;
  for (const Run& run : w.runs()) {
    Int steps = abs(run.exp);
    int sign = run.exp > 0 ? 1 : -1;
    for (Int i = 0; i < steps; ++i) {
      long from = r;
      if (sign > 0) {
        r = (r + c.generator_residue(run.gen)) % m;
        if (table[from][run.gen] >= 0) {
          out.push_back({table[from][run.gen], 1});
        }
      } else {
        r = ((r - c.generator_residue(run.gen)) % m + m) % m;
        if (table[r][run.gen] >= 0) {
          out.push_back({table[r][run.gen], -1});
        }
      }
    }
  }
  return Word::reduce(basis_alphabet, out);
}

}  // namespace polyad
