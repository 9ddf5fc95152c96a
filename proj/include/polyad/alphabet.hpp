#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyad/error.hpp"

namespace polyad {

// An ordered list of distinct generator names. Names follow the word grammar:
// a letter followed by letters or digits. Words refer to generators by index,
// so the order here is part of the alphabet's identity.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) {
      throw Error("alphabet must contain at least one generator");
    }
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
      const std::string& name = names_[i];
      if (!valid_name(name)) {
        throw Error("invalid generator name '" + name + "'");
      }
      auto [it, inserted] = index_.emplace(name, i);
      if (!inserted) {
        throw Error("duplicate generator name '" + name + "'");
      }
    }
  }

  static bool valid_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
      return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c));
    });
  }

  int size() const noexcept { return static_cast<int>(names_.size()); }

  const std::string& name(int i) const { return names_.at(i); }

  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<int> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

inline AlphabetRef make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

// Conventional alphabet of a given rank: u, v1, v2, ...
inline AlphabetRef standard_alphabet(int rank) {
  std::vector<std::string> names;
  names.reserve(rank > 0 ? rank : 0);
  names.push_back("u");
  for (int i = 1; i < rank; ++i) {
    names.push_back("v" + std::to_string(i));
  }
  return make_alphabet(std::move(names));
}

inline bool same_alphabet(const AlphabetRef& a, const AlphabetRef& b) {
  return a.get() == b.get() || (a && b && *a == *b);
}

}  // namespace polyad
