#include "polyad/freeness.hpp"

#include <algorithm>
#include <functional>

#include "polyad/parse.hpp"
#include "polyad/subgroup_graph.hpp"

namespace polyad {

std::string to_string(FreenessVerdict v) {
  switch (v) {
    case FreenessVerdict::kFreeWithWitness:
      return "free-with-witness";
    case FreenessVerdict::kNotFreeRankObstruction:
      return "not-free-rank-obstruction";
    case FreenessVerdict::kOutOfTheoremScope:
      return "out-of-theorem-scope";
    case FreenessVerdict::kNoWitnessFound:
      return "no-witness-found-up-to-L";
    case FreenessVerdict::kWitnessRejected:
      return "witness-rejected";
    case FreenessVerdict::kResourceCutoff:
      return "resource-cutoff";
  }
  throw Error("unknown freeness verdict");
}

std::optional<long> check_rank_condition(long k, int n) {
  if (k < 1) {
    throw Error("rank must be at least 1");
  }
  if (n < 3) {
    throw Error("arity must be at least 3");
  }
  if ((k - 1) % (n - 1) != 0) {
    return std::nullopt;
  }
  long s = (k - 1) / (n - 1) + 1;
  if (s <= 1) {
    return std::nullopt;
  }
  return s;
}

namespace {

// The witness set in certificate order: b first, then the theta orbit of
// each witness.
std::vector<Word> materialize(const HgTriple& triple,
                              std::span<const Word> witnesses) {
  const int n = triple.arity();
  std::vector<Word> set;
  set.reserve(1 + witnesses.size() * (n - 1));
  set.push_back(triple.b());
  for (const Word& v : witnesses) {
    Word w = v;
    for (int j = 0; j <= n - 2; ++j) {
      set.push_back(w);
      if (j < n - 2) {
        w = triple.apply_theta(w);
      }
    }
  }
  return set;
}

bool has_duplicates(std::vector<Word> set) {
  std::sort(set.begin(), set.end());
  return std::adjacent_find(set.begin(), set.end()) != set.end();
}

// Basis certificate for a generating set of a word group. For the plain
// group this is a direct fold of the candidates. For a translated carrier
// group (modulus m, unit e) the group is isomorphic to the height kernel
// via w -> w·e^-1, so the fold runs on the translated set: the candidates
// form a basis exactly when the translates generate a subgroup of index m
// (they always sit inside the kernel, and a sub-kernel subgroup of the
// kernel's own index is the kernel itself).
BasisCertificate certify_basis(const WordGroup& group,
                               std::vector<Word> candidate) {
  if (group.is_plain()) {
    return is_basis_of_whole_group(group.alphabet(), std::move(candidate));
  }
  const long m = group.carrier_modulus();
  std::vector<Word> translated;
  translated.reserve(candidate.size());
  const Word unit_inv = invert(group.unit());
  for (const Word& w : candidate) {
    group.require_carrier(w);
    translated.push_back(concat(w, unit_inv));
  }
  SubgroupGraph graph = SubgroupGraph::fold(group.alphabet(), translated);

  BasisCertificate cert;
  cert.generators = std::move(candidate);
  cert.rank = graph.rank();
  cert.index = graph.index();
  if (!cert.index || *cert.index != m) {
    cert.verdict = BasisVerdict::kNotGenerating;
    cert.reason =
        "translated set generates a subgroup of " +
        (cert.index ? "index " + std::to_string(*cert.index) : "infinite index") +
        ", but the carrier kernel has index " + std::to_string(m);
    return cert;
  }
  if (static_cast<long>(cert.generators.size()) != group.rank()) {
    cert.verdict = BasisVerdict::kGeneratesButCheckedByRank;
    cert.reason = "translated set generates the carrier kernel but has " +
                  std::to_string(cert.generators.size()) +
                  " elements; the kernel has rank " +
                  std::to_string(group.rank());
    return cert;
  }
  cert.verdict = BasisVerdict::kIsBasis;
  cert.reason = "translated set generates the carrier kernel (index " +
                std::to_string(m) + ") with exactly rank-many elements";
  return cert;
}

// All freely reduced carrier words of length 1..bound, ordered by length
// then rendered form.
std::vector<Word> candidate_words(const WordGroup& group, long bound) {
  const AlphabetRef& alphabet = group.alphabet();
  const int r = alphabet->size();
  std::vector<Word> out;
  std::vector<Word> layer;
  for (int g = 0; g < r; ++g) {
    layer.push_back(Word::generator(alphabet, g));
    layer.push_back(Word::generator(alphabet, g, -1));
  }
  for (long len = 1; len <= bound; ++len) {
    std::vector<Word> keep;
    for (const Word& w : layer) {
      if (group.in_carrier(w)) {
        keep.push_back(w);
      }
    }
    std::sort(keep.begin(), keep.end(), [](const Word& a, const Word& b) {
      return render(a) < render(b);
    });
    out.insert(out.end(), keep.begin(), keep.end());
    if (len == bound) {
      break;
    }
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (int g = 0; g < r; ++g) {
        for (int sign : {1, -1}) {
          Word ext = concat(w, Word::generator(alphabet, g, sign));
          if (ext.length() == len + 1) {
            next.push_back(ext);
          }
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

BasisCertificate check_witnesses(const HgTriple& triple,
                                 std::span<const Word> witnesses) {
  const long k = triple.base().rank();
  const int n = triple.arity();
  std::optional<long> s = check_rank_condition(k, n);
  if (!s) {
    throw Error("rank condition fails for k=" + std::to_string(k) +
                ", n=" + std::to_string(n) + "; no witness count is defined");
  }
  if (static_cast<long>(witnesses.size()) != *s - 1) {
    throw Error("expected " + std::to_string(*s - 1) + " witnesses, got " +
                std::to_string(witnesses.size()));
  }
  for (const Word& v : witnesses) {
    triple.base().require_carrier(v);
  }
  std::vector<Word> set = materialize(triple, witnesses);
  if (has_duplicates(set)) {
    BasisCertificate cert;
    cert.generators = std::move(set);
    cert.verdict = BasisVerdict::kNotGenerating;
    cert.rank = 0;
    cert.reason = "materialized set has fewer than k=" + std::to_string(k) +
                  " distinct elements, so it cannot generate a rank-k group";
    return cert;
  }
  return certify_basis(triple.base(), std::move(set));
}

FreenessReport search_witnesses(const FreenessQuery& q) {
  const long k = q.triple.base().rank();
  const int n = q.triple.arity();
  std::optional<long> s = check_rank_condition(k, n);
  if (!s) {
    throw Error("rank condition fails for k=" + std::to_string(k) +
                ", n=" + std::to_string(n) + "; nothing to search for");
  }
  const long arity_of_tuple = *s - 1;

  FreenessReport report;
  report.k = k;
  report.n = n;
  report.s = s;
  report.length_bound = q.length_bound;
  report.tuples_tried = 0;

  std::vector<Word> candidates =
      q.length_bound >= 1 ? candidate_words(q.triple.base(), q.length_bound)
                          : std::vector<Word>{};

  std::vector<Int> lengths;
  lengths.reserve(candidates.size());
  for (const Word& w : candidates) {
    lengths.push_back(w.length());
  }

  // Tuples stream out by total length, within that by index order, so the
  // first hit is the shortest witness tuple in canonical order.
  std::vector<std::size_t> pick(arity_of_tuple, 0);
  bool cutoff = false;
  std::function<bool(long, long)> walk = [&](long pos, long budget) -> bool {
    if (pos == arity_of_tuple) {
      if (budget != 0) {
        return false;
      }
      if (report.tuples_tried >= q.max_tuples) {
        cutoff = true;
        return true;
      }
      ++report.tuples_tried;
      std::vector<Word> tuple;
      tuple.reserve(pick.size());
      for (std::size_t i : pick) {
        tuple.push_back(candidates[i]);
      }
      std::vector<Word> set = materialize(q.triple, tuple);
      if (has_duplicates(set)) {
        return false;
      }
      BasisCertificate cert = certify_basis(q.triple.base(), std::move(set));
      if (cert.is_basis()) {
        report.verdict = FreenessVerdict::kFreeWithWitness;
        report.witnesses = std::move(tuple);
        report.certificate = std::move(cert);
        report.detail =
            "the set {b} ∪ {theta^j(v_i)} is a basis of the base group";
        return true;
      }
      return false;
    }
    const long remaining = arity_of_tuple - pos - 1;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Int& len = lengths[i];
      if (len + remaining > budget || len + remaining * q.length_bound < budget) {
        continue;
      }
      pick[pos] = i;
      if (walk(pos + 1, budget - static_cast<long>(len))) {
        return true;
      }
    }
    return false;
  };

  for (long total = arity_of_tuple; total <= arity_of_tuple * q.length_bound;
       ++total) {
    if (walk(0, total)) {
      if (!cutoff) {
        return report;
      }
      break;
    }
  }

  if (cutoff) {
    report.verdict = FreenessVerdict::kResourceCutoff;
    report.detail = "stopped after " + std::to_string(report.tuples_tried) +
                    " tuples (cap " + std::to_string(q.max_tuples) +
                    "); the length bound was not exhausted";
  } else {
    report.verdict = FreenessVerdict::kNoWitnessFound;
    report.detail = "exhausted all " + std::to_string(report.tuples_tried) +
                    " tuples of carrier words of length <= " +
                    std::to_string(q.length_bound) +
                    "; bounded search, not a refutation";
  }
  return report;
}

FreenessReport decide(const FreenessQuery& q) {
  const long k = q.triple.base().rank();
  const int n = q.triple.arity();

  FreenessReport report;
  report.k = k;
  report.n = n;
  report.length_bound = q.length_bound;

  if ((k - 1) % (n - 1) != 0) {
    report.verdict = FreenessVerdict::kNotFreeRankObstruction;
    report.detail = "k-1 = " + std::to_string(k - 1) +
                    " is not divisible by n-1 = " + std::to_string(n - 1) +
                    "; the derived structure cannot be free";
    return report;
  }
  const long s = (k - 1) / (n - 1) + 1;
  report.s = s;
  if (s <= 1) {
    report.verdict = FreenessVerdict::kOutOfTheoremScope;
    report.detail = "s = 1: the criterion is stated for s > 1 and decides "
                    "nothing about rank-1 bases";
    return report;
  }

  if (q.candidates) {
    BasisCertificate cert = check_witnesses(q.triple, *q.candidates);
    report.witnesses = *q.candidates;
    if (cert.is_basis()) {
      report.verdict = FreenessVerdict::kFreeWithWitness;
      report.detail =
          "the set {b} ∪ {theta^j(v_i)} is a basis of the base group";
    } else {
      report.verdict = FreenessVerdict::kWitnessRejected;
      report.detail = cert.reason;
    }
    report.certificate = std::move(cert);
    return report;
  }
  return search_witnesses(q);
}

}  // namespace polyad
