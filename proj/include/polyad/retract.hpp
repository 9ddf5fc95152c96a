#pragma once

#include <vector>

#include "polyad/error.hpp"

namespace polyad {

// The binary retract of an n-ary group at an element a:
//   x * y     = f(x, a, ..., a, y)        (n-2 copies of a)
//   identity  = skew(a)
//   x^-1      = f(skew(a), x, ..., x, skew(x), skew(a))   (n-3 copies of x)
// Works over any structure exposing arity(), eval() and skew() with a
// nested element_type (finite tables, derived word structures).
template <typename S>
class Retract {
 public:
  using element_type = typename S::element_type;

  Retract(const S& structure, element_type a)
      : structure_(&structure),
        a_(std::move(a)),
        identity_(structure.skew(a_)) {}

  const element_type& at() const noexcept { return a_; }
  const element_type& identity() const noexcept { return identity_; }

  element_type mul(const element_type& x, const element_type& y) const {
    const int n = structure_->arity();
    std::vector<element_type> args;
    args.reserve(n);
    args.push_back(x);
    for (int i = 0; i < n - 2; ++i) {
      args.push_back(a_);
    }
    args.push_back(y);
    return structure_->eval(args);
  }

  element_type inverse(const element_type& x) const {
    const int n = structure_->arity();
    std::vector<element_type> args;
    args.reserve(n);
    args.push_back(identity_);
    for (int i = 0; i < n - 3; ++i) {
      args.push_back(x);
    }
    args.push_back(structure_->skew(x));
    args.push_back(identity_);
    return structure_->eval(args);
  }

 private:
  const S* structure_;
  element_type a_;
  element_type identity_;
};

}  // namespace polyad
