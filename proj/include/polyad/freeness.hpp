#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyad/basis.hpp"
#include "polyad/hg_triple.hpp"

namespace polyad {

enum class FreenessVerdict {
  kFreeWithWitness,
  kNotFreeRankObstruction,
  kOutOfTheoremScope,
  kNoWitnessFound,
  kWitnessRejected,
  kResourceCutoff,
};

std::string to_string(FreenessVerdict v);

// A freeness question about the derived n-ary structure of a triple.
// When candidates are supplied they are checked as the witness tuple
// v_1..v_{s-1}; otherwise decide searches carrier words of length up to
// length_bound. max_tuples caps how many tuples the search may try; hitting
// the cap is reported distinctly from exhausting the bound.
struct FreenessQuery {
  HgTriple triple;
  std::optional<std::vector<Word>> candidates;
  long length_bound = 2;
  long max_tuples = 100000;
};

struct FreenessReport {
  FreenessVerdict verdict;
  long k = 0;
  int n = 0;
  std::optional<long> s;
  std::vector<Word> witnesses;
  std::optional<BasisCertificate> certificate;
  std::string detail;
  long length_bound = 0;
  long tuples_tried = 0;

  bool is_free() const { return verdict == FreenessVerdict::kFreeWithWitness; }
};

// s = (k-1)/(n-1) + 1 when (n-1) divides (k-1) and s > 1; nullopt otherwise.
// The derived structure of a rank-k triple can only be a free n-ary group
// when s is a whole number, and the criterion says nothing about s = 1.
std::optional<long> check_rank_condition(long k, int n);

// Materializes the set {b} ∪ {theta^j(v_i) : 1 <= i <= s-1, 0 <= j <= n-2}
// and certifies whether it is a basis of the base group. Requires exactly
// s-1 witnesses, each a carrier element; a duplicate in the materialized
// set fails immediately (k distinct elements are needed). For a translated
// carrier group the fold runs on {w·unit^-1}, which generates the height
// kernel exactly when the set is a basis.
BasisCertificate check_witnesses(const HgTriple& triple,
                                 std::span<const Word> witnesses);

// Enumerates witness tuples over carrier words of length <= length_bound.
// Candidates are ordered by length then rendered form; tuples by total
// length then product order, so the result is deterministic and the
// shortest witnesses are found first. Assumes the rank condition holds.
FreenessReport search_witnesses(const FreenessQuery& q);

// The full decision: rank condition, then witness check or bounded witness
// search. A no-witness-found verdict is not a refutation; only the rank
// obstruction refutes freeness outright.
FreenessReport decide(const FreenessQuery& q);

}  // namespace polyad
