#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyad/word.hpp"

namespace polyad {

// A folded subgroup graph: directed edges labelled by generators, at most one
// out-edge and one in-edge per label at every vertex. Built by folding the
// wedge of generator loops at a base vertex. After folding, vertices are
// renumbered canonically (breadth-first from the base, out-edges then
// in-edges in generator order), so equality of two graphs is equality of the
// generated subgroup.
class SubgroupGraph {
 public:
  static SubgroupGraph fold(const AlphabetRef& alphabet,
                            std::span<const Word> generators);

  const AlphabetRef& alphabet() const noexcept { return alphabet_; }
  int base() const noexcept { return 0; }
  int vertex_count() const noexcept { return static_cast<int>(out_.size()); }
  long edge_count() const;

  // -1 when absent.
  int out(int vertex, int gen) const { return out_.at(vertex).at(gen); }
  int in(int vertex, int gen) const { return in_.at(vertex).at(gen); }

  // Every vertex carries every label in both directions, i.e. the graph is a
  // complete cover and the subgroup has finite index equal to vertex_count().
  bool complete() const;
  std::optional<long> index() const;

  // Rank of the generated subgroup: E - V + 1 (the graph is connected).
  long rank() const;

  // Loop trace from the base vertex.
  bool member(const Word& w) const;

  bool operator==(const SubgroupGraph& other) const {
    return out_ == other.out_ && in_ == other.in_;
  }

  std::string to_dot() const;

 private:
  SubgroupGraph(AlphabetRef alphabet, std::vector<std::vector<int>> out,
                std::vector<std::vector<int>> in)
      : alphabet_(std::move(alphabet)), out_(std::move(out)), in_(std::move(in)) {}

  AlphabetRef alphabet_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// Folded-graph equality of the two generated subgroups.
bool same_subgroup(const AlphabetRef& alphabet, std::span<const Word> a,
                   std::span<const Word> b);

}  // namespace polyad
