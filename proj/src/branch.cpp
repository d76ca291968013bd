#include "subshift/branch.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "subshift/recognizability.hpp"

namespace subshift {

Word maximal_proper_common_suffix(const Substitution& s, const std::vector<Letter>& set) {
  require(!set.empty(), errc::precondition, "empty letter set");
  std::size_t limit = SIZE_MAX;
  for (Letter a : set) limit = std::min(limit, s.image(a).size() - 1);
  const Word& ref = s.image(set.front());
  std::size_t k = 0;
  while (k < limit) {
    char c = ref[ref.size() - 1 - k];
    bool all = true;
    for (Letter a : set) {
      const Word& img = s.image(a);
      if (img[img.size() - 1 - k] != c) {
        all = false;
        break;
      }
    }
    if (!all) break;
    ++k;
  }
  return ref.substr(ref.size() - k);
}

SuffixChain suffix_chain(const Substitution& s, std::vector<Letter> seed_subset) {
  std::sort(seed_subset.begin(), seed_subset.end());
  seed_subset.erase(std::unique(seed_subset.begin(), seed_subset.end()), seed_subset.end());
  require(seed_subset.size() >= 2, errc::precondition, "seed subset needs at least 2 letters");

  SuffixChain chain;
  chain.seed_subset = seed_subset;
  std::map<std::pair<std::vector<Letter>, Word>, std::size_t> seen;
  std::vector<Letter> cur = seed_subset;
  for (;;) {
    Word suf = maximal_proper_common_suffix(s, cur);
    if (suf.empty()) {
      chain.died = true;
      return chain;
    }
    auto key = std::make_pair(cur, suf);
    if (auto it = seen.find(key); it != seen.end()) {
      chain.preperiod = it->second;
      chain.period = chain.subsets.size() - it->second;
      return chain;
    }
    seen.emplace(key, chain.subsets.size());
    chain.subsets.push_back(cur);
    chain.suffixes.push_back(suf);

    std::set<Letter> next;
    for (Letter a : cur) {
      const Word& img = s.image(a);
      next.insert(at(img, img.size() - suf.size() - 1));
    }
    cur.assign(next.begin(), next.end());
  }
}

Word common_suffix_S(const Substitution& s, const SuffixChain& chain, std::size_t n) {
  require(n >= 1, errc::precondition, "n must be positive");
  require(!chain.died || n <= chain.suffixes.size(), errc::precondition,
          "chain died before step " + std::to_string(n));
  auto suffix_at = [&](std::size_t k) -> const Word& {  // 1-based
    std::size_t i = k - 1;
    if (i < chain.subsets.size()) return chain.suffixes[i];
    std::size_t off = (i - chain.preperiod) % chain.period;
    return chain.suffixes[chain.preperiod + off];
  };
  Word S = suffix_at(1);
  for (std::size_t k = 2; k <= n; ++k) S = suffix_at(k) + s.apply(S);
  return S;
}

std::vector<Letter> predecessor_letters(const LanguageTable& lang, const Word& w) {
  require(w.size() + 1 <= lang.max_len(), errc::precondition,
          "word of length " + std::to_string(w.size()) + " exceeds language table bound " +
              std::to_string(lang.max_len()));
  std::vector<Letter> out;
  for (const auto& v : lang.of_length(w.size() + 1))
    if (v.compare(1, w.size(), w) == 0) out.push_back(front(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Letter>> suffix_cycles(const Substitution& s) {
  const std::size_t d = s.size();
  std::vector<std::vector<Letter>> cycles;
  std::vector<bool> done(d, false);
  for (std::size_t a = 0; a < d; ++a) {
    // walk until revisiting; keep the cycle if its least letter is new
    std::vector<std::size_t> pos(d, SIZE_MAX);
    std::size_t cur = a, step = 0;
    while (pos[cur] == SIZE_MAX) {
      pos[cur] = step++;
      cur = s.last(static_cast<Letter>(cur));
    }
    if (done[cur]) continue;
    std::vector<Letter> cycle;
    std::size_t c = cur;
    do {
      cycle.push_back(static_cast<Letter>(c));
      done[c] = true;
      c = s.last(static_cast<Letter>(c));
    } while (c != cur);
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    cycles.push_back(std::move(cycle));
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

FixedBranch fixed_branch_multiplicity(const Substitution& s, const LanguageTable& lang,
                                      Letter seed) {
  require(s.first(seed) == seed, errc::precondition,
          "'" + s.alphabet().name(seed) + "' is not a right-fixed letter");
  require(lang.max_len() >= 2, errc::precondition, "language table must cover length 2");
  FixedBranch out;
  std::set<Letter> preds;
  for (const auto& cycle : suffix_cycles(s)) {
    bool qualifies = false;
    for (Letter m : cycle)
      if (lang.contains(word_of(m) + word_of(seed))) {
        qualifies = true;
        break;
      }
    if (qualifies) preds.insert(cycle.begin(), cycle.end());
  }
  out.predecessors.assign(preds.begin(), preds.end());
  out.multiplicity = out.predecessors.size();
  return out;
}

Word expand_equation(const Substitution& s, const BranchEquation& eq, std::size_t len) {
  require(!eq.w.empty() && eq.p >= 1, errc::precondition, "malformed branch equation");
  Substitution sp = power(s, static_cast<int>(eq.p));
  Word e = eq.w;
  while (e.size() < len) {
    Word next = eq.w + sp.apply(e);
    if (next.size() > 4 * len) next.resize(4 * len);
    if (next.size() == e.size()) break;  // degenerate, non-growing
    e = std::move(next);
  }
  return e.substr(0, std::min(e.size(), len));
}

namespace {

// Minimal period of the repeating suffix values of a periodic chain.
std::vector<Word> minimal_s_tail(const SuffixChain& chain) {
  std::vector<Word> tail(chain.suffixes.begin() + static_cast<long>(chain.preperiod),
                         chain.suffixes.end());
  for (std::size_t d = 1; d <= tail.size(); ++d) {
    if (tail.size() % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < tail.size() && ok; ++i) ok = tail[i] == tail[i % d];
    if (ok) return std::vector<Word>(tail.begin(), tail.begin() + static_cast<long>(d));
  }
  return tail;
}

}  // namespace

BranchReport enumerate_branch_points(const Substitution& s, const LanguageTable& lang,
                                     std::size_t approx_len, BranchOptions opts) {
  require(approx_len >= 1, errc::precondition, "approximation length must be positive");
  require(lang.max_len() >= approx_len + 1, errc::precondition,
          "approximation length " + std::to_string(approx_len) +
              " exceeds language table bound " + std::to_string(lang.max_len()));
  require(s.size() <= opts.subset_alphabet_cap, errc::cap,
          "subset enumeration capped at " + std::to_string(opts.subset_alphabet_cap) +
              " letters");
  if (opts.check_recognizability) {
    auto rec = is_recognizable_up_to(s, opts.recognizability_bound);
    if (!rec.recognizable)
      fail(errc::precondition,
           "substitution is not recognizable at bound " +
               std::to_string(opts.recognizability_bound) + "; branch enumeration needs it");
  }

  BranchReport report;
  report.approximation_len = approx_len;
  const std::size_t mult_len = approx_len;  // lang covers approx_len + 1

  auto persistent_preds = [&](const Word& prefix) {
    // predecessor sets shrink with prefix length, so the deepest one decides
    return predecessor_letters(lang, prefix.substr(0, mult_len));
  };

  // Fixed points first.
  std::vector<bool> bounded = bounded_letters(s);
  std::set<Word> fixed_prefixes;
  for (Letter seed : fixed_point_letters(s, Side::right)) {
    if (bounded[seed]) continue;
    FixedBranch fb = fixed_branch_multiplicity(s, lang, seed);
    if (fb.multiplicity < 2) continue;
    BranchPoint pt;
    pt.prefix = expand_fixed_point(fixed_point_handle(s, seed, Side::right), approx_len);
    pt.seed = seed;
    pt.predecessors = fb.predecessors;
    pt.multiplicity = fb.multiplicity;
    fixed_prefixes.insert(pt.prefix);
    report.points.push_back(std::move(pt));
  }

  // Non-fixed points from periodic chains, merged by equation first.
  std::set<std::pair<Word, std::size_t>> equations;
  const std::size_t d = s.size();
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<Letter> seed;
    for (std::size_t a = 0; a < d; ++a)
      if (mask & (1u << a)) seed.push_back(static_cast<Letter>(a));
    SuffixChain chain = suffix_chain(s, seed);
    if (chain.died) continue;
    std::vector<Word> tail = minimal_s_tail(chain);
    const std::size_t p = tail.size();
    for (std::size_t phase = 0; phase < p; ++phase) {
      // w = s_phi . tau(s_{phi-1}) ... tau^{p-1}(s_{phi-p+1}), from
      // S_n = s_n . tau(S_{n-1}) unrolled over one period
      Word w;
      for (std::size_t m = 0; m < p; ++m) {
        Word term = tail[(phase + p - m) % p];
        for (std::size_t k = 0; k < m; ++k) term = s.apply(term);
        w += term;
      }
      equations.insert({w, p});
    }
  }

  std::map<Word, BranchEquation> by_prefix;
  for (const auto& [w, p] : equations) {
    BranchEquation eq{w, p};
    Word prefix = expand_equation(s, eq, approx_len);
    if (prefix.size() < approx_len) {
      report.warnings.push_back("chain limit for equation stalled before the approximation bound");
      continue;
    }
    if (fixed_prefixes.count(prefix)) continue;  // chain converged to a fixed point
    auto [it, inserted] = by_prefix.emplace(prefix, eq);
    if (!inserted && !(it->second == eq))
      report.warnings.push_back(
          "two distinct equations agree to the approximation bound; merged (may be distinct "
          "points)");
  }

  for (auto& [prefix, eq] : by_prefix) {
    auto preds = persistent_preds(prefix);
    if (preds.size() < 2) continue;  // degenerate limit, not a branch point
    BranchPoint pt;
    pt.prefix = prefix;
    pt.equation = eq;
    pt.predecessors = preds;
    pt.multiplicity = preds.size();
    report.points.push_back(std::move(pt));
  }

  for (const auto& pt : report.points) report.total_preimages += pt.multiplicity;
  report.quasi_invertible = report.points.size() == 1;
  return report;
}

Classification classify(const BranchReport& report) {
  Classification c;
  c.total_preimages = report.total_preimages;
  c.branch_points = report.points.size();
  c.quasi_invertible = report.quasi_invertible;
  if (c.quasi_invertible) c.quasi_multiplicity = report.points.front().multiplicity;
  return c;
}

}  // namespace subshift
