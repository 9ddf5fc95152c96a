#include "polyad/finite_table.hpp"

#include <algorithm>
#include <cmath>

namespace polyad {

namespace {

constexpr long kMaxCells = 1000000;       // q^n cap for tables
constexpr long kMaxVerifySteps = 200000000;  // q^(2n-1) cap for verify_axioms

// q^e with overflow saturation past the caps.
long checked_pow(int q, int e) {
  long acc = 1;
  for (int i = 0; i < e; ++i) {
    if (acc > kMaxVerifySteps) {
      return kMaxVerifySteps + 1;
    }
    acc *= q;
  }
  return acc;
}

}  // namespace

std::string AxiomFailure::describe() const {
  std::string out;
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) {
        s += ",";
      }
      s += std::to_string(v[i]);
    }
    return s;
  };
  if (kind == Kind::kAssociativity) {
    out = "associativity fails on tuple (" + join(tuple) + ") at cuts " +
          std::to_string(cut_i) + " and " + std::to_string(cut_j);
  } else if (kind == Kind::kDoernte) {
    out = "Doernte identity fails on tuple (" + join(tuple) + ")";
  } else {
    out = "solvability fails at position " + std::to_string(position) +
          " with coefficients (" + join(coefficients) + "): elements " +
          std::to_string(duplicate_a) + " and " + std::to_string(duplicate_b) +
          " both yield " + std::to_string(collided_value);
  }
  return out;
}

FiniteNaryTable::FiniteNaryTable(int q, int n, std::vector<int> table)
    : q_(q), n_(n), table_(std::move(table)) {
  if (q_ < 1) {
    throw Error("carrier size must be at least 1");
  }
  if (n_ < 3) {
    throw Error("arity must be at least 3");
  }
  long cells = checked_pow(q_, n_);
  if (cells > kMaxCells) {
    throw Error("table too large: q^n exceeds 10^6 cells");
  }
  if (static_cast<long>(table_.size()) != cells) {
    throw Error("table has " + std::to_string(table_.size()) +
                " cells, expected q^n = " + std::to_string(cells));
  }
  for (int v : table_) {
    if (v < 0 || v >= q_) {
      throw Error("table value " + std::to_string(v) + " out of range");
    }
  }
}

std::size_t FiniteNaryTable::flat_index(std::span<const int> args) const {
  std::size_t idx = 0;
  for (int a : args) {
    idx = idx * q_ + static_cast<std::size_t>(a);
  }
  return idx;
}

int FiniteNaryTable::eval(std::span<const int> args) const {
  if (static_cast<int>(args.size()) != n_) {
    throw Error("expected " + std::to_string(n_) + " arguments, got " +
                std::to_string(args.size()));
  }
  for (int a : args) {
    if (a < 0 || a >= q_) {
      throw Error("argument " + std::to_string(a) + " out of range");
    }
  }
  return table_[flat_index(args)];
}

AxiomReport FiniteNaryTable::verify_axioms() const {
  if (checked_pow(q_, 2 * n_ - 1) > kMaxVerifySteps) {
    throw Error("table too large to verify: q^(2n-1) exceeds the cap");
  }

  // Unique solvability first at each position (cheap), then associativity.
  // For fixed coefficients the slot map x -> f(..., x, ...) must be a
  // bijection; scanning for a repeated value finds the lexicographically
  // first failure.
  std::vector<int> args(n_, 0);
  for (int pos = 1; pos <= n_; ++pos) {
    std::vector<int> coeffs(n_ - 1, 0);
    bool done = false;
    while (!done) {
      for (int i = 0, c = 0; i < n_; ++i) {
        if (i != pos - 1) {
          args[i] = coeffs[c++];
        }
      }
      std::vector<int> seen(q_, -1);
      for (int x = 0; x < q_; ++x) {
        args[pos - 1] = x;
        int value = table_[flat_index(args)];
        if (seen[value] >= 0) {
          AxiomFailure f;
          f.kind = AxiomFailure::Kind::kSolvability;
          f.position = pos;
          f.coefficients = coeffs;
          f.duplicate_a = seen[value];
          f.duplicate_b = x;
          f.collided_value = value;
          return {false, f};
        }
        seen[value] = x;
      }
      // next coefficient tuple, lexicographic
      int k = n_ - 2;
      while (k >= 0 && coeffs[k] == q_ - 1) {
        coeffs[k--] = 0;
      }
      if (k < 0) {
        done = true;
      } else {
        ++coeffs[k];
      }
    }
  }

  // Associativity over all (2n-1)-tuples. Comparing every cut against cut 1
  // covers all pairs by transitivity, and the first failing pair always
  // involves cut 1, so reported counterexamples are lexicographically first.
  const int len = 2 * n_ - 1;
  std::vector<int> tuple(len, 0);
  std::vector<int> outer(n_);
  bool done = false;
  while (!done) {
    int reference = 0;
    for (int cut = 1; cut <= n_; ++cut) {
      // f(x_1,...,x_{cut-1}, f(x_cut,...,x_{cut+n-1}), x_{cut+n},...)
      std::span<const int> inner(tuple.data() + (cut - 1),
                                 static_cast<std::size_t>(n_));
      int nested = table_[flat_index(inner)];
      for (int i = 0; i < cut - 1; ++i) {
        outer[i] = tuple[i];
      }
      outer[cut - 1] = nested;
      for (int i = cut; i < n_; ++i) {
        outer[i] = tuple[i + n_ - 1];
      }
      int value = table_[flat_index(outer)];
      if (cut == 1) {
        reference = value;
      } else if (value != reference) {
        AxiomFailure f;
        f.kind = AxiomFailure::Kind::kAssociativity;
        f.tuple = tuple;
        f.cut_i = 1;
        f.cut_j = cut;
        return {false, f};
      }
    }
    int k = len - 1;
    while (k >= 0 && tuple[k] == q_ - 1) {
      tuple[k--] = 0;
    }
    if (k < 0) {
      done = true;
    } else {
      ++tuple[k];
    }
  }
  return {true, std::nullopt};
}

int FiniteNaryTable::skew(int x) const {
  if (x < 0 || x >= q_) {
    throw Error("element out of range");
  }
  std::vector<int> args(n_, x);
  int found = -1;
  for (int y = 0; y < q_; ++y) {
    args[n_ - 1] = y;
    if (table_[flat_index(args)] == x) {
      if (found >= 0) {
        throw Error("skew of " + std::to_string(x) +
                    " is ambiguous; not an n-ary group");
      }
      found = y;
    }
  }
  if (found < 0) {
    throw Error("skew of " + std::to_string(x) +
                " does not exist; not an n-ary group");
  }
  return found;
}

int FiniteNaryTable::solve(int position, std::span<const int> coeffs,
                           int d) const {
  if (position < 1 || position > n_) {
    throw Error("solve position must be between 1 and " + std::to_string(n_));
  }
  if (static_cast<int>(coeffs.size()) != n_ - 1) {
    throw Error("solve needs " + std::to_string(n_ - 1) + " coefficients");
  }
  std::vector<int> args(n_);
  for (int i = 0, c = 0; i < n_; ++i) {
    if (i != position - 1) {
      args[i] = coeffs[c++];
    }
  }
  int found = -1;
  for (int x = 0; x < q_; ++x) {
    args[position - 1] = x;
    if (eval(args) == d) {
      if (found >= 0) {
        throw Error("equation has two solutions; not an n-ary group");
      }
      found = x;
    }
  }
  if (found < 0) {
    throw Error("equation has no solution; not an n-ary group");
  }
  return found;
}

std::optional<int> FiniteNaryTable::detect_nary_identity() const {
  std::vector<int> args(n_);
  for (int a = 0; a < q_; ++a) {
    bool good = true;
    for (int slot = 0; slot < n_ && good; ++slot) {
      for (int x = 0; x < q_ && good; ++x) {
        std::fill(args.begin(), args.end(), a);
        args[slot] = x;
        if (table_[flat_index(args)] != x) {
          good = false;
        }
      }
    }
    if (good) {
      return a;
    }
  }
  return std::nullopt;
}

AxiomReport FiniteNaryTable::check_doernte() const {
  std::vector<int> skews(q_);
  for (int x = 0; x < q_; ++x) {
    skews[x] = skew(x);
  }
  std::vector<int> args(n_);
  for (int x = 0; x < q_; ++x) {
    for (int y = 0; y < q_; ++y) {
      for (int i = 2; i <= n_; ++i) {
        // f(x^(i-2), skew(x), x^(n-i), y) = y
        int p = 0;
        for (int t = 0; t < i - 2; ++t) {
          args[p++] = x;
        }
        args[p++] = skews[x];
        for (int t = 0; t < n_ - i; ++t) {
          args[p++] = x;
        }
        args[p++] = y;
        if (table_[flat_index(args)] != y) {
          AxiomFailure f;
          f.kind = AxiomFailure::Kind::kDoernte;
          f.tuple = args;
          return {false, f};
        }
        // mirrored: f(y, x^(n-i), skew(x), x^(i-2)) = y
        p = 0;
        args[p++] = y;
        for (int t = 0; t < n_ - i; ++t) {
          args[p++] = x;
        }
        args[p++] = skews[x];
        for (int t = 0; t < i - 2; ++t) {
          args[p++] = x;
        }
        if (table_[flat_index(args)] != y) {
          AxiomFailure f;
          f.kind = AxiomFailure::Kind::kDoernte;
          f.tuple = args;
          return {false, f};
        }
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<int> cyclic_group_table(int q) {
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      table[static_cast<std::size_t>(x) * q + y] = (x + y) % q;
    }
  }
  return table;
}

FiniteNaryTable derived_table(int q, int n, std::span<const int> group_table,
                              int b) {
  if (q < 1 || static_cast<long>(group_table.size()) !=
                   static_cast<long>(q) * q) {
    throw Error("group table must be q by q");
  }
  auto mul = [&](int x, int y) {
    return group_table[static_cast<std::size_t>(x) * q + y];
  };
  // group laws
  int identity = -1;
  for (int e = 0; e < q; ++e) {
    bool ok = true;
    for (int x = 0; x < q && ok; ++x) {
      ok = mul(e, x) == x && mul(x, e) == x;
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    throw Error("binary table has no identity");
  }
  for (int x = 0; x < q; ++x) {
    bool has_inverse = false;
    for (int y = 0; y < q; ++y) {
      if (mul(x, y) == identity) {
        has_inverse = true;
      }
    }
    if (!has_inverse) {
      throw Error("binary table has no inverse for " + std::to_string(x));
    }
    for (int y = 0; y < q; ++y) {
      for (int z = 0; z < q; ++z) {
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          throw Error("binary table is not associative");
        }
      }
    }
  }
  if (b < 0 || b >= q) {
    throw Error("b out of range");
  }
  for (int x = 0; x < q; ++x) {
    if (mul(b, x) != mul(x, b)) {
      throw Error("b must be central in the base group");
    }
  }

  long cells = checked_pow(q, n);
  if (cells > kMaxCells) {
    throw Error("table too large: q^n exceeds 10^6 cells");
  }
  std::vector<int> table(cells);
  std::vector<int> args(n, 0);
  for (long idx = 0;; ++idx) {
    int acc = args[0];
    for (int i = 1; i < n; ++i) {
      acc = mul(acc, args[i]);
    }
    table[idx] = mul(acc, b);
    int k = n - 1;
    while (k >= 0 && args[k] == q - 1) {
      args[k--] = 0;
    }
    if (k < 0) {
      break;
    }
    ++args[k];
  }
  return FiniteNaryTable(q, n, std::move(table));
}

FiniteNaryTable cyclic_derived_table(int q, int n, int b) {
  std::vector<int> table = cyclic_group_table(q);
  return derived_table(q, n, table, b);
}

FiniteRetract retract_table(const FiniteNaryTable& t, int a) {
  const int q = t.q();
  const int n = t.arity();
  if (a < 0 || a >= q) {
    throw Error("element out of range");
  }
  FiniteRetract r;
  r.q = q;
  r.identity = t.skew(a);
  r.mul.resize(static_cast<std::size_t>(q) * q);
  std::vector<int> args(n);
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      args[0] = x;
      for (int i = 1; i < n - 1; ++i) {
        args[i] = a;
      }
      args[n - 1] = y;
      r.mul[static_cast<std::size_t>(x) * q + y] = t.eval(args);
    }
  }
  r.inverse.resize(q);
  for (int x = 0; x < q; ++x) {
    args[0] = r.identity;
    for (int i = 1; i <= n - 3; ++i) {
      args[i] = x;
    }
    args[n - 2] = t.skew(x);
    args[n - 1] = r.identity;
    r.inverse[x] = t.eval(args);
  }
  return r;
}

}  // namespace polyad
