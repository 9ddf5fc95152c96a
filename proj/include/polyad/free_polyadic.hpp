#pragma once

#include <span>
#include <vector>

#include "polyad/basis.hpp"
#include "polyad/coset.hpp"
#include "polyad/hg_triple.hpp"

namespace polyad {

// The coset decomposition of the ambient free group F(X) under the height
// residue: F = H ∪ Hu ∪ ... ∪ Hu^(n-2) with H the kernel. F(X) is the
// universal covering group of the free n-ary group; the n-ary carrier is
// the residue-1 coset and the quotient F/H is cyclic of order n-1.
struct PostCover {
  AlphabetRef alphabet;
  int n;
  CosetMap map;
  Transversal reps;

  // residue in [0, n-2]
  long coset_of(const Word& w) const { return map.residue(w); }
};

// The basis construction for the kernel-side group, carried through three
// stages: the Schreier basis of the kernel H, its image in the coset group
// under w -> w·u, and the Nielsen-adjusted form aligned with the orbit of
// the conjugating automorphism.
struct BasisPipeline {
  std::vector<Word> kernel_basis;   // Schreier basis of H
  std::vector<Word> shifted_basis;  // image under w -> w·u, a basis of (G,∘)
  std::vector<Word> orbit_basis;    // {u^n} ∪ {u^i v_j u^-i}, same group
};

// The n-ary structure on the residue-1 coset of F(X), decomposed as a
// derived structure: base group (G,∘) with ∘ the u-translated product,
// theta = conjugation by u, b = u^n.
struct ExtractedHg {
  HgTriple triple;
  BasisPipeline pipeline;

  // Isomorphism H -> (G,∘), w -> w·u, and its inverse.
  Word eta(const Word& w) const;
  Word eta_inv(const Word& w) const;
};

// The free n-ary group on an alphabet: words of height ≡ 1 mod (n-1) under
// n-fold concatenation. The first generator is the distinguished u used by
// the cover decomposition and the extracted structure.
class FreePolyadicGroup {
 public:
  using element_type = Word;

  FreePolyadicGroup(int n, AlphabetRef alphabet);

  int arity() const noexcept { return n_; }
  const AlphabetRef& alphabet() const noexcept { return alphabet_; }
  int rank() const { return alphabet_->size(); }

  const Word& u() const noexcept { return u_; }

  bool in_carrier(const Word& w) const;
  void require_carrier(const Word& w) const;

  // f(w_1,...,w_n): concatenation, with carrier checks on the way in.
  Word f(std::span<const Word> args) const;

  // Name expected by Retract and other structure-generic code.
  Word eval(std::span<const Word> args) const { return f(args); }

  // The skew element, in closed form w^(2-n).
  Word skew(const Word& w) const;

  PostCover post_cover() const;

  BasisPipeline basis_pipeline() const;

  // The derived decomposition of this group over the coset group at u.
  ExtractedHg extract_hg() const;

  // The universal extension of a generator map into a free-word target
  // carrying the derived n-ary structure (n-fold product): the substitution
  // homomorphism F(X) -> F(Y) with h(x) = images[x].
  Homomorphism cover_extend(const AlphabetRef& target,
                            std::vector<Word> images) const;

 private:
  int n_;
  AlphabetRef alphabet_;
  Word u_;
};

}  // namespace polyad
