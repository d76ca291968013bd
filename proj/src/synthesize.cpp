#include "subshift/synthesize.hpp"

#include <algorithm>
#include <map>

namespace subshift {

namespace {

void check_constraints(std::size_t n, const std::vector<ProfileEntry>& profile) {
  require(!profile.empty(), errc::precondition, "empty profile");
  require(n >= 2, errc::precondition, "need at least 2 letters");
  std::size_t prev_k = 1;
  std::size_t used = 0;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto& e = profile[i];
    require(e.count >= 1, errc::precondition, "profile counts must be positive");
    require(e.multiplicity >= 2 && e.multiplicity > prev_k, errc::precondition,
            "multiplicities must satisfy 2 <= k_1 < k_2 < ...");
    require(e.multiplicity <= n, errc::precondition,
            "multiplicity " + std::to_string(e.multiplicity) + " exceeds the alphabet size");
    std::size_t cost = e.multiplicity + e.count * (e.multiplicity - 1);
    require(cost <= n + 1 - used, errc::precondition,
            "profile entry " + std::to_string(i + 1) + " violates the packing bound");
    used += cost;
    prev_k = e.multiplicity;
  }
  require(used <= n + profile.size(), errc::precondition, "profile exceeds the total bound");
}

}  // namespace

SynthesisResult synthesize_branch_profile(std::size_t n_letters,
                                          const std::vector<ProfileEntry>& profile) {
  check_constraints(n_letters, profile);
  require(n_letters <= 16, errc::cap, "synthesis capped at 16 letters");

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n_letters; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  auto alphabet = std::make_shared<Alphabet>(names);
  const std::size_t n = n_letters;

  // Working columns, rightmost first. Column c assigns to every letter the
  // letter written at position (length - c) of its image.
  struct Column {
    std::map<Letter, Letter> diagonal;  // letter -> its own column letter
    Letter fill;                        // everyone else
  };
  std::vector<Column> columns;

  const std::size_t k1 = profile[0].multiplicity;
  {
    // last column: k1 self-loops make the fixed point a k1-branch point
    Column col;
    for (std::size_t l = 0; l < k1; ++l)
      col.diagonal[static_cast<Letter>(l)] = static_cast<Letter>(l);
    col.fill = static_cast<Letter>(k1 - 1);
    columns.push_back(col);
  }
  std::size_t next_letter = k1 - 1;  // groups overlap on their shared letter
  for (std::size_t ci = 0; ci < profile.size(); ++ci) {
    const std::size_t k = profile[ci].multiplicity;
    std::size_t from = ci == 0 ? 2 : 1;  // class 1 spent its first point on the fixed point
    if (ci > 0) next_letter += 1;        // fresh group start for a new class
    for (std::size_t t = from; t <= profile[ci].count; ++t) {
      Column col;
      for (std::size_t l = 0; l + 1 < k; ++l)
        col.diagonal[static_cast<Letter>(next_letter + l)] =
            static_cast<Letter>(next_letter + l);
      col.fill = static_cast<Letter>(next_letter + k - 1);
      require(next_letter + k - 1 < n, errc::precondition, "profile does not fit the alphabet");
      columns.push_back(col);
      next_letter += k - 1;
    }
  }

  // Filler bits over the first two letters keep images pairwise distinct;
  // chains entering them die at the diagonal last column.
  std::size_t bits = 0;
  while ((1u << bits) < n) ++bits;

  for (std::size_t padding = 0; padding <= 4; ++padding) {
    std::vector<Word> images(n);
    for (std::size_t a = 0; a < n; ++a) {
      Word img = word_of(0);                                    // left proper
      for (std::size_t c = 0; c < n; ++c) img += word_of(static_cast<Letter>(c));  // census
      img += Word(padding, static_cast<char>(0));
      for (std::size_t b = 0; b < bits; ++b)
        img += word_of(static_cast<Letter>((a >> b) & 1));
      for (std::size_t c = columns.size(); c-- > 0;) {
        auto it = columns[c].diagonal.find(static_cast<Letter>(a));
        img += word_of(it != columns[c].diagonal.end() ? it->second : columns[c].fill);
      }
      images[a] = std::move(img);
    }
    Substitution candidate(alphabet, std::move(images));

    const std::size_t approx = 24;
    LanguageTable lang = language(candidate, approx + 1);
    BranchOptions bopts;
    bopts.check_recognizability = false;  // equal image lengths: no proper-suffix pair exists
    BranchReport rep = enumerate_branch_points(candidate, lang, approx, bopts);

    std::map<std::size_t, std::size_t> want, got;
    for (const auto& e : profile) want[e.multiplicity] += e.count;
    for (const auto& pt : rep.points) ++got[pt.multiplicity];
    if (want == got)
      return SynthesisResult{std::move(candidate), std::move(rep), padding};
  }
  fail(errc::precondition, "synthesis verification failed after padding retries");
}

}  // namespace subshift
