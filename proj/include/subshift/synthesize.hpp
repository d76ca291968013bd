#pragma once

#include "subshift/branch.hpp"
#include "subshift/substitution.hpp"

namespace subshift {

/// Request j_i branch points of multiplicity k_i each, with strictly
/// increasing k_i.
struct ProfileEntry {
  std::size_t multiplicity = 0;  // k_i, at least 2
  std::size_t count = 0;         // j_i, at least 1
};

struct SynthesisResult {
  Substitution sub;
  BranchReport verification;  // the post-hoc oracle run that accepted it
  std::size_t padding_columns = 0;
};

/// Builds a left-proper substitution on n letters realizing exactly the
/// requested branch profile, by filling suffix columns right to left: the
/// first class's first point is the fixed point (a diagonal last column),
/// every further point comes from a constant suffix chain over a sliding
/// letter group. The construction is verified by enumerate_branch_points and
/// retried with padding columns if the check fails.
SynthesisResult synthesize_branch_profile(std::size_t n_letters,
                                          const std::vector<ProfileEntry>& profile);

}  // namespace subshift
