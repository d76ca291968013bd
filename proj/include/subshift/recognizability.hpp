#pragma once

#include <optional>

#include "subshift/substitution.hpp"

namespace subshift {

/// Witness of a recognizability failure at the checked bound: tau(b) is a
/// proper suffix of tau(a) and tau(a)w, tau(b)w occur in the fixed point
/// with the same 1-cutting of w.
struct RecognizabilityWitness {
  Letter a;
  Letter b;
  Word w;
};

struct RecognizabilityReport {
  std::size_t checked_up_to = 0;
  bool recognizable = true;  // up to the bound; a semi-decision
  std::optional<RecognizabilityWitness> witness;
};

struct RecognizabilityOptions {
  // Length of the fixed-point window scanned for occurrences.
  std::size_t scan_len = 1 << 14;
};

/// Finite-scale test of the unilateral recognizability criterion: searches a
/// fixed-point window for a same-1-cutting witness of length L.
RecognizabilityReport is_recognizable_up_to(const Substitution& s, std::size_t L,
                                            RecognizabilityOptions opts = {});

}  // namespace subshift
