#pragma once

#include <optional>

#include "subshift/language.hpp"
#include "subshift/substitution.hpp"

namespace subshift {

/// The (A_k, s_k) iteration: s_k is the maximal proper common suffix of the
/// images of A_k, and A_{k+1} collects the letters immediately preceding s_k.
/// The pair sequence is eventually periodic or dies on an empty suffix.
struct SuffixChain {
  std::vector<Letter> seed_subset;
  std::vector<std::vector<Letter>> subsets;  // A_1, A_2, ... (sorted)
  std::vector<Word> suffixes;                // s_1, s_2, ...
  std::size_t preperiod = 0;                 // M: first index of the repeating part
  std::size_t period = 0;                    // period of the (A_k, s_k) sequence
  bool died = false;
};

/// Longest suffix shared by all images of `set` that is proper for each.
Word maximal_proper_common_suffix(const Substitution& s, const std::vector<Letter>& set);

SuffixChain suffix_chain(const Substitution& s, std::vector<Letter> seed_subset);

/// S_n via the recurrence S_1 = s_1, S_n = s_n . tau(S_{n-1}); equals the
/// maximal proper common suffix of the tau^n-images of A_1.
Word common_suffix_S(const Substitution& s, const SuffixChain& chain, std::size_t n);

/// {alpha : alpha.w is in the language}.
std::vector<Letter> predecessor_letters(const LanguageTable& lang, const Word& w);

/// Cycles of the last-letter map; each cycle starts at its least letter.
std::vector<std::vector<Letter>> suffix_cycles(const Substitution& s);

struct FixedBranch {
  std::size_t multiplicity = 0;
  std::vector<Letter> predecessors;  // sorted
};

/// Preimage letters of the fixed point at `seed`: the union of suffix cycles
/// containing some letter m with m.seed in the language.
FixedBranch fixed_branch_multiplicity(const Substitution& s, const LanguageTable& lang,
                                      Letter seed);

/// A non-fixed branch point y solves w . tau^p(y) = y.
struct BranchEquation {
  Word w;
  std::size_t p = 1;
  bool operator==(const BranchEquation&) const = default;
};

struct BranchPoint {
  Word prefix;  // approximation at the requested bound
  std::size_t multiplicity = 0;
  std::vector<Letter> predecessors;
  std::optional<Letter> seed;              // fixed points
  std::optional<BranchEquation> equation;  // non-fixed points
  bool is_fixed() const { return seed.has_value(); }
};

struct BranchReport {
  std::vector<BranchPoint> points;
  std::size_t total_preimages = 0;  // N = sum of multiplicities
  bool quasi_invertible = false;    // exactly one branch point
  std::size_t approximation_len = 0;
  std::vector<std::string> warnings;
};

struct Classification {
  std::size_t total_preimages = 0;       // N
  std::size_t branch_points = 0;         // n
  bool quasi_invertible = false;
  std::optional<std::size_t> quasi_multiplicity;  // M when quasi-invertible
};

struct BranchOptions {
  bool check_recognizability = true;
  std::size_t recognizability_bound = 32;
  std::size_t subset_alphabet_cap = 16;  // chains enumerate 2^|A| subsets
};

/// All branch points of the subshift of s: fixed ones via suffix cycles,
/// non-fixed ones via the periodic suffix chains. Pass a normalized
/// substitution when fixed points only appear under a power.
BranchReport enumerate_branch_points(const Substitution& s, const LanguageTable& lang,
                                     std::size_t approx_len, BranchOptions opts = {});

Classification classify(const BranchReport& report);

/// Prefix of the point solving w . tau^p(y) = y.
Word expand_equation(const Substitution& s, const BranchEquation& eq, std::size_t len);

}  // namespace subshift
