#include "polyad/basis.hpp"

namespace polyad {

std::string to_string(BasisVerdict v) {
  switch (v) {
    case BasisVerdict::kIsBasis:
      return "is-basis";
    case BasisVerdict::kGeneratesButCheckedByRank:
      return "generates-but-checked-by-rank";
    case BasisVerdict::kNotGenerating:
      return "not-generating";
  }
  return "unknown";
}

BasisCertificate is_basis_of_whole_group(const AlphabetRef& alphabet,
                                         std::vector<Word> candidate) {
  SubgroupGraph graph = SubgroupGraph::fold(alphabet, candidate);
  const long k = alphabet->size();
  const long rank = graph.rank();
  std::optional<long> index = graph.index();

  BasisCertificate cert{std::move(candidate), BasisVerdict::kNotGenerating,
                        rank, index, ""};
  if (index != 1) {
    cert.reason = index ? "generates a proper subgroup of index " +
                              std::to_string(*index)
                        : "generates a subgroup of infinite index";
    return cert;
  }
  if (static_cast<long>(cert.generators.size()) != k) {
    cert.verdict = BasisVerdict::kGeneratesButCheckedByRank;
    cert.reason = "generates the whole group but has " +
                  std::to_string(cert.generators.size()) +
                  " elements, not the rank " + std::to_string(k);
    return cert;
  }
  // Index 1 and k generators in a rank-k free group: a basis, since free
  // groups are Hopfian.
  cert.verdict = BasisVerdict::kIsBasis;
  cert.reason = "generates the whole group with exactly rank-many elements";
  return cert;
}

std::vector<Word> nielsen_replace(std::vector<Word> basis, std::size_t i,
                                  std::size_t j, NielsenMove move) {
  if (i >= basis.size() || j >= basis.size()) {
    throw Error("nielsen_replace index out of range");
  }
  if (i == j) {
    throw Error("nielsen_replace requires distinct indices");
  }
  switch (move) {
    case NielsenMove::kSwap:
      std::swap(basis[i], basis[j]);
      break;
    case NielsenMove::kInvert:
      basis[i] = invert(basis[i]);
      break;
    case NielsenMove::kLeftMultiply:
      basis[i] = concat(basis[j], basis[i]);
      break;
    case NielsenMove::kRightMultiply:
      basis[i] = concat(basis[i], basis[j]);
      break;
    case NielsenMove::kLeftMultiplyInverse:
      basis[i] = concat(invert(basis[j]), basis[i]);
      break;
    case NielsenMove::kRightMultiplyInverse:
      basis[i] = concat(basis[i], invert(basis[j]));
      break;
  }
  return basis;
}

}  // namespace polyad
