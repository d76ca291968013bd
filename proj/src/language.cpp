#include "subshift/language.hpp"

#include <algorithm>

namespace subshift {

namespace {

constexpr std::uint64_t kLenSat = 1ull << 62;  // saturating word-length counter

// Per-letter summary of tau^n(a): factors up to the bound plus the boundary
// windows needed to compose level n+1 without materializing the word.
struct Block {
  std::unordered_set<Word> factors;
  Word prefix;   // first min(len, W-1) letters
  Word suffix;   // last  min(len, W-1) letters
  std::uint64_t len = 0;
};

void add_factors(std::unordered_set<Word>& out, const Word& w, std::size_t max_len) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t l = 1; l <= max_len && i + l <= w.size(); ++l)
      out.insert(w.substr(i, l));
}

Block block_of_word(const Word& w, std::size_t max_len) {
  Block b;
  add_factors(b.factors, w, max_len);
  std::size_t win = max_len > 0 ? max_len - 1 : 0;
  b.prefix = w.substr(0, std::min(w.size(), win));
  b.suffix = w.size() <= win ? w : w.substr(w.size() - win);
  b.len = w.size();
  return b;
}

Block compose(const Substitution& s, Letter a, const std::vector<Block>& prev,
              std::size_t max_len) {
  const std::size_t win = max_len > 0 ? max_len - 1 : 0;
  Block out;
  Word tail;  // last <= win letters of the concatenation so far
  const Word& img = s.image(a);
  for (std::size_t i = 0; i < img.size(); ++i) {
    const Block& piece = prev[at(img, i)];
    out.factors.insert(piece.factors.begin(), piece.factors.end());
    if (!tail.empty()) {
      // factors crossing this boundary live inside tail + prefix(piece)
      Word join = tail + piece.prefix;
      for (std::size_t start = 0; start < tail.size(); ++start)
        for (std::size_t l = tail.size() - start + 1;
             l <= max_len && start + l <= join.size(); ++l)
          out.factors.insert(join.substr(start, l));
    }
    if (out.prefix.size() < win) {
      out.prefix += piece.prefix;
      if (out.prefix.size() > win) out.prefix.resize(win);
    }
    if (piece.len >= win) {
      tail = piece.suffix;
    } else {
      tail += piece.suffix;  // short block: suffix is the whole word
      if (tail.size() > win) tail.erase(0, tail.size() - win);
    }
    out.len = std::min(out.len + piece.len, kLenSat);
  }
  out.suffix = tail;
  return out;
}

}  // namespace

LanguageTable language(const Substitution& s, std::size_t max_len, LanguageOptions opts) {
  require(max_len >= 1, errc::precondition, "max_len must be positive");

  std::vector<bool> bounded = bounded_letters(s);
  bool any_growing = std::find(bounded.begin(), bounded.end(), false) != bounded.end();
  require(any_growing, errc::precondition, "no letter generates a growing word");

  std::vector<Block> level(s.size());
  for (std::size_t a = 0; a < s.size(); ++a)
    level[a] = block_of_word(s.image(static_cast<Letter>(a)), max_len);

  std::unordered_set<Word> total;
  for (const auto& b : level) total.insert(b.factors.begin(), b.factors.end());

  int depth = 1;
  bool stable_once = false;
  while (true) {
    std::uint64_t min_growing = kLenSat;
    for (std::size_t a = 0; a < s.size(); ++a)
      if (!bounded[a]) min_growing = std::min(min_growing, level[a].len);
    if (stable_once && min_growing >= 2 * static_cast<std::uint64_t>(max_len)) break;

    if (depth >= opts.depth_cap)
      fail(errc::cap, "language saturation not reached within depth cap " +
                          std::to_string(opts.depth_cap) + " for length bound " +
                          std::to_string(max_len));

    std::vector<Block> next(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
      next[a] = compose(s, static_cast<Letter>(a), level, max_len);
    level = std::move(next);
    ++depth;

    std::unordered_set<Word> grown = total;
    for (const auto& b : level) grown.insert(b.factors.begin(), b.factors.end());
    stable_once = grown.size() == total.size();
    total = std::move(grown);
  }

  std::vector<std::unordered_set<Word>> by_length(max_len + 1);
  for (const auto& w : total) by_length[w.size()].insert(w);
  return LanguageTable(max_len, depth, std::move(by_length));
}

}  // namespace subshift
