#include "subshift/recognizability.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace subshift {

namespace {

// Proper-suffix pairs (a, b): tau(b) is a proper suffix of tau(a).
std::vector<std::pair<Letter, Letter>> suffix_pairs(const Substitution& s) {
  std::vector<std::pair<Letter, Letter>> out;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (a == b) continue;
      const Word& wa = s.image(static_cast<Letter>(a));
      const Word& wb = s.image(static_cast<Letter>(b));
      if (wb.size() < wa.size() && wa.compare(wa.size() - wb.size(), wb.size(), wb) == 0)
        out.emplace_back(static_cast<Letter>(a), static_cast<Letter>(b));
    }
  return out;
}

}  // namespace

RecognizabilityReport is_recognizable_up_to(const Substitution& s, std::size_t L,
                                            RecognizabilityOptions opts) {
  require(L >= 1, errc::precondition, "bound must be positive");
  RecognizabilityReport report;
  report.checked_up_to = L;

  auto pairs = suffix_pairs(s);
  if (pairs.empty()) return report;  // criterion has nothing to witness

  // Generating fixed point: of s itself when possible, else of the
  // normalized power (same subshift, same language).
  auto norm = normalize_power(s);
  std::vector<bool> bounded = bounded_letters(norm.sub);
  std::optional<Letter> seed;
  for (Letter l : fixed_point_letters(norm.sub, Side::right))
    if (!bounded[l]) {
      seed = l;
      break;
    }
  require(seed.has_value(), errc::precondition, "no growing fixed point");

  std::size_t maximg = 0;
  for (std::size_t a = 0; a < s.size(); ++a)
    maximg = std::max(maximg, s.image(static_cast<Letter>(a)).size());
  std::size_t scan = std::max(opts.scan_len, 64 * (L + 2 * maximg));

  // u = tau(v): de-substitute one tau-step to get the 1-cutting set E.
  Word u = expand_fixed_point(fixed_point_handle(norm.sub, *seed, Side::right), scan);
  Word v;
  if (norm.exponent == 1) {
    v = u;  // u is tau-fixed: u = tau(u)
  } else {
    v = expand_fixed_point(fixed_point_handle(norm.sub, *seed, Side::right), scan);
    v = power(s, norm.exponent - 1).apply(v);
    v.resize(std::min(v.size(), scan));
  }

  std::vector<std::size_t> cuts;
  std::vector<bool> is_cut(u.size() + 1, false);
  {
    std::size_t pos = 0, i = 0;
    while (pos <= u.size()) {
      cuts.push_back(pos);
      is_cut[pos] = true;
      if (i >= v.size()) break;
      pos += s.image(at(v, i++)).size();
    }
  }

  // Group occurrences by (w, cut pattern of w); a pattern seen after both
  // tau(a) and tau(b) is a witness.
  for (auto [a, b] : pairs) {
    const Word& ia = s.image(a);
    const Word& ib = s.image(b);
    std::map<std::pair<Word, std::vector<std::size_t>>, int> seen;  // bit0: a-side, bit1: b-side
    auto record = [&](const Word& img, int side) -> std::optional<Word> {
      for (std::size_t i = 0; i + img.size() + L <= u.size(); ++i) {
        if (u.compare(i, img.size(), img) != 0) continue;
        std::size_t wstart = i + img.size();
        std::vector<std::size_t> pattern;
        for (std::size_t p = wstart; p <= wstart + L; ++p)
          if (is_cut[p]) pattern.push_back(p - wstart);
        Word w = u.substr(wstart, L);
        int& mask = seen[{w, pattern}];
        mask |= side;
        if (mask == 3) return w;
      }
      return std::nullopt;
    };
    record(ia, 1);
    if (auto w = record(ib, 2)) {
      report.recognizable = false;
      report.witness = RecognizabilityWitness{a, b, *w};
      return report;
    }
  }
  return report;
}

}  // namespace subshift
