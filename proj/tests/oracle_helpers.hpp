// Test-only brute-force oracles. Everything here recomputes results by
// direct expansion of tau^n(a) as strings, independent of the library's
// composed tables and chain machinery.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "subshift/parse.hpp"
#include "subshift/substitution.hpp"

namespace oracle {

using subshift::Letter;
using subshift::Substitution;
using subshift::Word;

inline Substitution sub(const std::string& rules) {
  return subshift::parse_substitution(rules);
}

// Factors up to max_len of all tau^n(a), by expanding words until both the
// factor set and the per-letter growth stabilize. Intentionally naive.
inline std::set<Word> naive_language(const Substitution& s, std::size_t max_len) {
  std::vector<Word> words(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) words[a] = subshift::word_of(static_cast<Letter>(a));
  std::set<Word> factors;
  std::set<Word> prev;
  auto bounded = subshift::bounded_letters(s);
  for (int depth = 0; depth < 64; ++depth) {
    for (auto& w : words) {
      w = s.apply(w);
      if (w.size() > 8192) w.resize(8192);  // factor-complete once > 2*max_len
    }
    for (const auto& w : words)
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t l = 1; l <= max_len && i + l <= w.size(); ++l)
          factors.insert(w.substr(i, l));
    std::size_t min_grow = SIZE_MAX;
    for (std::size_t a = 0; a < s.size(); ++a)
      if (!bounded[a]) min_grow = std::min(min_grow, words[a].size());
    if (factors == prev && min_grow >= 2 * max_len) return factors;
    prev = factors;
  }
  return factors;
}

inline std::set<Letter> naive_predecessors(const std::set<Word>& lang, const Word& w) {
  std::set<Letter> out;
  for (const auto& v : lang)
    if (v.size() == w.size() + 1 && v.compare(1, w.size(), w) == 0)
      out.insert(subshift::front(v));
  return out;
}

// Predecessor letters that survive at every prefix length of `point`.
inline std::set<Letter> persistent_predecessors(const std::set<Word>& lang, const Word& point,
                                                std::size_t up_to) {
  std::set<Letter> alive;
  for (std::size_t a = 0; a < 256; ++a)
    if (lang.count(subshift::word_of(static_cast<Letter>(a)))) alive.insert(static_cast<Letter>(a));
  for (std::size_t l = 1; l <= up_to && l <= point.size(); ++l) {
    auto preds = naive_predecessors(lang, point.substr(0, l));
    std::set<Letter> next;
    std::set_intersection(alive.begin(), alive.end(), preds.begin(), preds.end(),
                          std::inserter(next, next.begin()));
    alive = std::move(next);
  }
  return alive;
}

// Branch-point prefixes at `approx` by pure language search: words with at
// least two predecessors whose every one-letter right extension can keep at
// least two predecessors, up to `deep`.
inline std::set<Word> branch_prefixes(const std::set<Word>& lang, std::size_t approx,
                                      std::size_t deep) {
  std::map<Word, bool> memo;
  // extendable(w): |preds(w)| >= 2 and some right extension stays extendable
  std::function<bool(const Word&)> extendable = [&](const Word& w) -> bool {
    if (naive_predecessors(lang, w).size() < 2) return false;
    if (w.size() >= deep) return true;
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    memo[w] = false;  // cycles cannot certify themselves
    bool ok = false;
    for (std::size_t a = 0; a < 256 && !ok; ++a) {
      Word ext = w + subshift::word_of(static_cast<Letter>(a));
      if (lang.count(ext)) ok = extendable(ext);
    }
    return memo[w] = ok;
  };
  std::set<Word> out;
  for (const auto& w : lang)
    if (w.size() == approx && extendable(w)) out.insert(w);
  return out;
}

}  // namespace oracle
