#pragma once

#include <map>
#include <optional>

#include "subshift/branch.hpp"
#include "subshift/bratteli.hpp"
#include "subshift/language.hpp"
#include "subshift/substitution.hpp"

namespace subshift {

/// Return words to `base` in the fixed point it generates, in order of first
/// appearance; psi(j) = words[j-1] names the bijection onto {1..|R|}.
struct ReturnWordSystem {
  Letter base;
  std::vector<Word> words;
  std::size_t search_len;  // scanned prefix length at which the set stabilized
};

struct ReturnWordOptions {
  std::size_t initial_scan = 256;
  std::size_t scan_cap = 1u << 20;
};

ReturnWordSystem return_words(const Substitution& s, Letter base,
                              ReturnWordOptions opts = {});

enum class Provenance { induced, properized, two_block, pipeline };

/// A substitution derived from another, with the identities that certify it.
struct DerivedSubstitution {
  Substitution result;
  Provenance provenance;
  std::vector<std::string> checks;  // verified identities, human-readable
};

/// Decodes words over the return alphabet back to the base alphabet.
Word psi(const ReturnWordSystem& rws, const Word& w);

/// The induced substitution tau_1 on return-word indices: tau(psi(j))
/// decomposes uniquely into return words. Verifies psi . tau_1 = tau . psi.
DerivedSubstitution induced_substitution(const Substitution& s, const ReturnWordSystem& rws);

/// Left-properization tau*(a) = s1 p_a x_a for tau(a) = p_a x_a s1, defined
/// when the full-alphabet suffix chain is constant at s1. The conjugacy
/// tau*(tau^n(w)) s1 = s1 tau^{n+1}(w) is verified on all letters.
DerivedSubstitution left_properize(const Substitution& s);

/// Can left_properize run on s as given?
bool properizable(const Substitution& s);

/// The sliding 2-block recoding: phi maps the N two-letter factors to a new
/// alphabet.
struct TwoBlockCode {
  std::vector<Word> two_words;          // ordered: role letters first, then lexicographic
  AlphabetPtr target;                   // N letters named by role (m1, M1, ...) or digits
  std::map<Word, Letter> phi;
  std::vector<Letter> fixed_images;     // the m_i letters
  std::vector<Letter> predecessor_images;  // the M_l letters (general construction)

  /// Sliding recode with right radius one; output length |w| - 1.
  Word recode(const Word& w) const;
};

struct TwoBlockResult {
  TwoBlockCode code;
  DerivedSubstitution derived;
  Substitution normalized_source;  // the power of s the construction ran on
  int normalized_exponent;
};

/// Builds the closing substitution tau' on the 2-words of the language.
/// Requires every branch point of s to be fixed; normalizes internally.
/// Prefix- and suffix-permutative substitutions take the permutative rule
/// tau'(phi(ij)) = phi(tau(i)) phi(ij); otherwise the general rule
/// tau'(phi(ij)) = phi(tau(i)) phi(s^i p^j) applies.
TwoBlockResult two_block_closing(const Substitution& s, const LanguageTable& lang);

struct PipelineResult {
  OrderedBratteliDiagram diagram;
  std::vector<DerivedSubstitution> derivation;
  ClosingReport closing;
  std::optional<ReturnWordSystem> induction;  // present on the induced path
};

/// Adic representation pipeline. Quasi-invertible inputs go through direct
/// left-properization when the suffix chain allows it, otherwise through
/// return-word induction on the fixed-point cylinder (with first-level
/// multiplicities equal to the return-word lengths), properizing the induced
/// substitution if its branch point is not fixed. Inputs whose branch points
/// are all fixed go through the 2-block construction.
PipelineResult adic_pipeline(const Substitution& s);

}  // namespace subshift
