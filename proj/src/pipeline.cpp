#include <algorithm>

#include "subshift/transforms.hpp"

namespace subshift {

namespace {

LanguageTable pipeline_language(const Substitution& s) {
  return language(s, 34);
}

BranchReport pipeline_branch_report(const Substitution& s, const LanguageTable& lang) {
  BranchOptions opts;
  opts.check_recognizability = false;  // callers assert recognizability up front
  return enumerate_branch_points(s, lang, std::min<std::size_t>(lang.max_len() - 1, 32), opts);
}

}  // namespace

PipelineResult adic_pipeline(const Substitution& s) {
  NormalizedPower norm = normalize_power(s);
  const Substitution& rho = norm.sub;
  LanguageTable lang = pipeline_language(rho);
  BranchReport report = pipeline_branch_report(rho, lang);
  require(!report.points.empty(), errc::precondition, "no branch points: nothing to represent");

  bool all_fixed = std::all_of(report.points.begin(), report.points.end(),
                               [](const BranchPoint& p) { return p.is_fixed(); });

  std::vector<DerivedSubstitution> derivation;

  if (report.quasi_invertible) {
    const BranchPoint& y = report.points.front();
    if (!y.is_fixed() && properizable(rho)) {
      // direct properization: the branch point becomes the tau*-fixed point
      DerivedSubstitution star = left_properize(rho);
      {
        Letter seed = star.result.first(0);  // left proper: shared first letter
        Word yw = expand_equation(rho, *y.equation, 512);
        Word uw = expand_fixed_point(fixed_point_handle(star.result, seed, Side::right), 512);
        require(yw == uw, errc::precondition,
                "properized fixed point does not match the branch point");
        star.checks.push_back("branch point is tau*-fixed (prefix length 512)");
      }
      derivation.push_back(star);
      OrderedBratteliDiagram diagram = diagram_from_substitution(derivation.back().result);
      LanguageTable lang2 = pipeline_language(derivation.back().result);
      ClosingReport closing = closing_check(derivation.back().result, lang2);
      require(closing.closing, errc::precondition, "properized diagram fails the closing check");
      return PipelineResult{std::move(diagram), std::move(derivation), std::move(closing),
                            std::nullopt};
    }

    // induce on the fixed-point cylinder, then properize if still needed
    std::vector<bool> bounded = bounded_letters(rho);
    std::optional<Letter> base;
    for (Letter l : fixed_point_letters(rho, Side::right))
      if (!bounded[l]) {
        base = l;
        break;
      }
    require(base.has_value(), errc::precondition, "no growing fixed point to induce on");
    ReturnWordSystem rws = return_words(rho, *base);
    DerivedSubstitution tau1 = induced_substitution(rho, rws);
    derivation.push_back(tau1);

    Substitution current = tau1.result;
    NormalizedPower n1 = normalize_power(current);
    BranchReport rep1 = pipeline_branch_report(n1.sub, pipeline_language(n1.sub));
    require(rep1.quasi_invertible, errc::precondition,
            "induced substitution is not quasi-invertible");
    if (!rep1.points.front().is_fixed()) {
      // Corollary route: some power is right proper; properize that power
      std::optional<DerivedSubstitution> star;
      for (int k = 1; k <= 8 && !star; ++k) {
        Substitution pk = k == 1 ? current : power(current, k);
        if (properizable(pk)) star = left_properize(pk);
      }
      require(star.has_value(), errc::cap,
              "no power of the induced substitution is properizable within the cap");
      derivation.push_back(*star);
      current = star->result;
    }

    OrderedBratteliDiagram diagram = diagram_from_substitution(current);
    // tower over the induced system: one first-level edge per return-word letter
    for (std::size_t j = 0; j < rws.words.size() && j < diagram.first_level.size(); ++j)
      diagram.first_level[j] = rws.words[j].size();
    LanguageTable lang2 = pipeline_language(current);
    ClosingReport closing = closing_check(current, lang2);
    require(closing.closing, errc::precondition, "induced diagram fails the closing check");
    return PipelineResult{std::move(diagram), std::move(derivation), std::move(closing),
                          std::move(rws)};
  }

  if (all_fixed) {
    TwoBlockResult tb = two_block_closing(rho, lang);
    derivation.push_back(tb.derived);
    OrderedBratteliDiagram diagram = diagram_from_substitution(derivation.back().result);
    LanguageTable lang2 = pipeline_language(derivation.back().result);
    ClosingReport closing = closing_check(derivation.back().result, lang2);
    require(closing.closing, errc::precondition, "2-block diagram fails the closing check");
    return PipelineResult{std::move(diagram), std::move(derivation), std::move(closing),
                          std::nullopt};
  }

  fail(errc::precondition,
       "unsupported: a non-fixed branch point coexists with other branch points; no known "
       "construction covers this case");
}

}  // namespace subshift
