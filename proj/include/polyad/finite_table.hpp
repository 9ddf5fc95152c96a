#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyad/error.hpp"

namespace polyad {

// First failure found by verify_axioms, with enough data to replay it.
// Tuples and positions are reported in lexicographic scan order, so the
// counterexample is deterministic.
struct AxiomFailure {
  enum class Kind { kAssociativity, kSolvability, kDoernte };
  Kind kind;
  // Associativity: the (2n-1)-tuple and the two cut positions whose
  // bracketings disagree. Doernte: the argument tuple that missed.
  std::vector<int> tuple;
  int cut_i = 0;
  int cut_j = 0;
  // Solvability: the position, the fixed coefficients, and two elements the
  // slot map sends to the same value (so some right-hand side has no
  // solution and another has two).
  int position = 0;
  std::vector<int> coefficients;
  int duplicate_a = 0;
  int duplicate_b = 0;
  int collided_value = 0;

  std::string describe() const;
};

struct AxiomReport {
  bool ok;
  std::optional<AxiomFailure> failure;
};

// An n-ary operation on {0,...,q-1} as a flat table, row-major with the
// last index fastest. Construction checks totality and range and caps the
// table at 10^6 cells.
class FiniteNaryTable {
 public:
  using element_type = int;

  FiniteNaryTable(int q, int n, std::vector<int> table);

  int q() const noexcept { return q_; }
  int arity() const noexcept { return n_; }
  const std::vector<int>& table() const noexcept { return table_; }

  int eval(std::span<const int> args) const;

  // Checks n-ary associativity across all cut pairs and unique solvability
  // at every position; first counterexample in lexicographic order.
  AxiomReport verify_axioms() const;

  // The unique y with f(x,...,x,y) = x, by scanning. Throws if the skew is
  // missing or ambiguous (the table is then not an n-ary group).
  int skew(int x) const;

  // The unique x with f(a_1,...,x,...,a_n) = d at the 1-based position.
  int solve(int position, std::span<const int> coeffs, int d) const;

  // An element a with f(a,...,a,x,a,...,a) = x for every slot and x, i.e.
  // an n-ary identity; exists exactly when the structure is derived from a
  // group with b = identity.
  std::optional<int> detect_nary_identity() const;

  // Doernte identities: f(x^(i-2), skew(x), x^(n-i), y) = y and the mirror,
  // for all x, y and every placement. A corollary of the group axioms;
  // exposed separately as a direct check.
  AxiomReport check_doernte() const;

  bool operator==(const FiniteNaryTable&) const = default;

 private:
  std::size_t flat_index(std::span<const int> args) const;

  int q_;
  int n_;
  std::vector<int> table_;
};

// The Cayley table of Z_q (for building derived structures).
std::vector<int> cyclic_group_table(int q);

// f(x_1,...,x_n) = x_1 · x_2 · ... · x_n · b over a finite group given by
// its q-by-q Cayley table (row-major). Validates that the table is a group
// and that b is central.
FiniteNaryTable derived_table(int q, int n, std::span<const int> group_table,
                              int b);

// Convenience: derived_table over Z_q.
FiniteNaryTable cyclic_derived_table(int q, int n, int b);

// The binary retract of a finite n-ary group at element a, as explicit
// tables: mul(x,y) = f(x, a,...,a, y), identity skew(a), and the inverse
// map y = f(skew(a), x^(n-3), skew(x), skew(a)).
struct FiniteRetract {
  int q;
  int identity;
  std::vector<int> mul;      // q*q, row-major
  std::vector<int> inverse;  // per element
};

FiniteRetract retract_table(const FiniteNaryTable& t, int a);

}  // namespace polyad
