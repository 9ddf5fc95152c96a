#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyad/subgroup_graph.hpp"

namespace polyad {

enum class BasisVerdict {
  kIsBasis,
  kGeneratesButCheckedByRank,
  kNotGenerating,
};

std::string to_string(BasisVerdict v);

// Outcome of a basis check, re-checkable from the generators alone.
struct BasisCertificate {
  std::vector<Word> generators;
  BasisVerdict verdict;
  long rank;                  // rank of the generated subgroup
  std::optional<long> index;  // finite index, when the cover is complete
  std::string reason;

  bool is_basis() const { return verdict == BasisVerdict::kIsBasis; }
};

// Folds the candidate set and decides whether it is a basis of the whole
// free group on `alphabet`. A size-k generating set of a rank-k free group
// is automatically a basis because free groups are Hopfian (no proper
// quotient of the group is isomorphic to it), so generation plus the count
// check suffices; no Nielsen reduction is run.
BasisCertificate is_basis_of_whole_group(const AlphabetRef& alphabet,
                                         std::vector<Word> candidate);

enum class NielsenMove {
  kSwap,
  kInvert,
  kLeftMultiply,           // basis[i] <- basis[j] * basis[i]
  kRightMultiply,          // basis[i] <- basis[i] * basis[j]
  kLeftMultiplyInverse,    // basis[i] <- basis[j]^-1 * basis[i]
  kRightMultiplyInverse,   // basis[i] <- basis[i] * basis[j]^-1
};

// One elementary Nielsen transformation; the result generates the same
// subgroup (certifiable with same_subgroup). Requires i != j and valid
// indices.
std::vector<Word> nielsen_replace(std::vector<Word> basis, std::size_t i,
                                  std::size_t j, NielsenMove move);

}  // namespace polyad
