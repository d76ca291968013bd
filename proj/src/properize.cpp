#include <algorithm>

#include "subshift/transforms.hpp"

namespace subshift {

namespace {

// Full-alphabet suffix chain constant at s1: every image ends in s1 and the
// chain never moves off it.
std::optional<Word> constant_full_suffix(const Substitution& s) {
  std::vector<Letter> full(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) full[a] = static_cast<Letter>(a);
  Word s1 = maximal_proper_common_suffix(s, full);
  if (s1.empty()) return std::nullopt;
  SuffixChain chain = suffix_chain(s, full);
  if (chain.died) return std::nullopt;
  for (const auto& suf : chain.suffixes)
    if (suf != s1) return std::nullopt;
  return s1;
}

}  // namespace

bool properizable(const Substitution& s) {
  return s.size() >= 2 && constant_full_suffix(s).has_value();
}

DerivedSubstitution left_properize(const Substitution& s) {
  auto s1 = constant_full_suffix(s);
  if (!s1)
    fail(errc::precondition,
         "left_properize needs the full-alphabet suffix chain constant at s1; "
         "take a right-proper power first");

  std::vector<Word> images(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    const Word& img = s.image(static_cast<Letter>(a));
    images[a] = *s1 + img.substr(0, img.size() - s1->size());
  }
  DerivedSubstitution out{Substitution(s.alphabet_ptr(), std::move(images)),
                          Provenance::properized,
                          {}};

  // tau*(tau^n(a)) s1 = s1 tau^{n+1}(a), exact for n <= 4
  for (int n = 0; n <= 4; ++n) {
    for (std::size_t a = 0; a < s.size(); ++a) {
      Word arg = word_of(static_cast<Letter>(a));
      for (int k = 0; k < n; ++k) arg = s.apply(arg);
      Word lhs = out.result.apply(arg) + *s1;
      Word rhs = *s1 + s.apply(arg);
      require(lhs == rhs, errc::precondition, "properization conjugacy identity failed");
    }
  }
  out.checks.push_back("tau*(tau^n(a)) s1 = s1 tau^{n+1}(a) for n <= 4, all letters");

  require(structural_predicates(out.result).left_proper, errc::precondition,
          "properized substitution is not left proper");
  out.checks.push_back("tau* is left proper");
  return out;
}

}  // namespace subshift
