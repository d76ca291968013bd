#pragma once

#include <unordered_set>
#include <vector>

#include "subshift/substitution.hpp"

namespace subshift {

/// All factors of the substitution language up to a length bound, collected
/// by iterating tau until the factor sets saturate.
class LanguageTable {
 public:
  LanguageTable(std::size_t max_len, int source_depth,
                std::vector<std::unordered_set<Word>> by_length)
      : max_len_(max_len), source_depth_(source_depth), by_length_(std::move(by_length)) {}

  std::size_t max_len() const { return max_len_; }
  int source_depth() const { return source_depth_; }

  bool contains(const Word& w) const {
    if (w.empty() || w.size() > max_len_) return false;
    return by_length_[w.size()].count(w) > 0;
  }

  const std::unordered_set<Word>& of_length(std::size_t len) const { return by_length_.at(len); }

 private:
  std::size_t max_len_;
  int source_depth_;
  std::vector<std::unordered_set<Word>> by_length_;  // index by length, [0] unused
};

struct LanguageOptions {
  int depth_cap = 64;
};

/// Saturated factor table: iteration stops once consecutive depths agree and
/// every unbounded letter's image is at least twice the length bound. Bounded
/// letters (images that never grow) are excluded from the length test; their
/// factors stop changing as soon as the sets do.
LanguageTable language(const Substitution& s, std::size_t max_len, LanguageOptions opts = {});

}  // namespace subshift
