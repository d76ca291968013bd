#include "subshift/substitution.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace subshift {

Substitution power(const Substitution& s, int n) {
  require(n >= 1, errc::precondition, "power requires n >= 1");
  Substitution acc = s;
  for (int k = 1; k < n; ++k) {
    std::vector<Word> next;
    next.reserve(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
      next.push_back(s.apply(acc.image(static_cast<Letter>(a))));
    acc = Substitution(s.alphabet_ptr(), std::move(next));
  }
  return acc;
}

IncidenceMatrix incidence_matrix(const Substitution& s) {
  IncidenceMatrix m;
  m.dim = s.size();
  m.entries.assign(m.dim * m.dim, 0);
  for (std::size_t a = 0; a < m.dim; ++a) {
    const Word& img = s.image(static_cast<Letter>(a));
    for (std::size_t i = 0; i < img.size(); ++i) ++m.at(a, at(img, i));
  }
  return m;
}

IncidenceMatrix matrix_power(const IncidenceMatrix& m, int n) {
  require(n >= 1, errc::precondition, "matrix power requires n >= 1");
  IncidenceMatrix acc = m;
  for (int k = 1; k < n; ++k) {
    IncidenceMatrix next;
    next.dim = m.dim;
    next.entries.assign(m.dim * m.dim, 0);
    for (std::size_t i = 0; i < m.dim; ++i)
      for (std::size_t l = 0; l < m.dim; ++l) {
        std::uint64_t v = acc.at(i, l);
        if (!v) continue;
        for (std::size_t j = 0; j < m.dim; ++j) next.at(i, j) += v * m.at(l, j);
      }
    acc = std::move(next);
  }
  return acc;
}

bool is_primitive(const Substitution& s) {
  const std::size_t d = s.size();
  // Boolean reachability; Wielandt bound (d-1)^2 + 1 on the exponent.
  std::vector<bool> reach(d * d, false);
  for (std::size_t a = 0; a < d; ++a) {
    const Word& img = s.image(static_cast<Letter>(a));
    for (std::size_t i = 0; i < img.size(); ++i) reach[a * d + at(img, i)] = true;
  }
  auto positive = [&](const std::vector<bool>& m) {
    return std::all_of(m.begin(), m.end(), [](bool b) { return b; });
  };
  std::vector<bool> acc = reach;
  const std::size_t bound = (d - 1) * (d - 1) + 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (positive(acc)) return true;
    std::vector<bool> next(d * d, false);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < d; ++l)
        if (acc[i * d + l])
          for (std::size_t j = 0; j < d; ++j)
            if (reach[l * d + j]) next[i * d + j] = true;
    acc = std::move(next);
  }
  return false;
}

StructuralPredicates structural_predicates(const Substitution& s) {
  StructuralPredicates p;
  const std::size_t d = s.size();
  std::set<Letter> firsts, lasts;
  for (std::size_t a = 0; a < d; ++a) {
    firsts.insert(s.first(static_cast<Letter>(a)));
    lasts.insert(s.last(static_cast<Letter>(a)));
  }
  p.left_proper = firsts.size() == 1;
  p.right_proper = lasts.size() == 1;
  p.prefix_permutative = firsts.size() == d;
  p.suffix_permutative = lasts.size() == d;
  std::set<Word> imgs;
  for (std::size_t a = 0; a < d; ++a) imgs.insert(s.image(static_cast<Letter>(a)));
  p.injective_on_letters = imgs.size() == d;
  return p;
}

std::vector<bool> bounded_letters(const Substitution& s) {
  const std::size_t d = s.size();
  std::vector<bool> bounded(d, false);
  for (std::size_t a = 0; a < d; ++a) bounded[a] = s.image(static_cast<Letter>(a)).size() == 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < d; ++a)
      if (bounded[a] && !bounded[s.first(static_cast<Letter>(a))]) {
        bounded[a] = false;
        changed = true;
      }
  }
  return bounded;
}

std::vector<Letter> fixed_point_letters(const Substitution& s, Side side) {
  std::vector<Letter> out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    Letter l = static_cast<Letter>(a);
    if ((side == Side::right ? s.first(l) : s.last(l)) == l) out.push_back(l);
  }
  return out;
}

namespace {

// Cycle structure of a self-map of the alphabet: lcm of cycle lengths and
// the longest tail before entering a cycle.
struct MapShape {
  std::uint64_t cycle_lcm = 1;
  std::size_t max_tail = 0;
};

MapShape shape(const std::vector<Letter>& f) {
  const std::size_t d = f.size();
  MapShape out;
  std::vector<bool> in_cycle(d, false);
  for (std::size_t a = 0; a < d; ++a) {
    std::vector<std::size_t> visit_pos(d, SIZE_MAX);
    std::size_t cur = a, step = 0;
    while (visit_pos[cur] == SIZE_MAX) {
      visit_pos[cur] = step++;
      cur = f[cur];
    }
    std::size_t len = step - visit_pos[cur];
    std::size_t c = cur;
    bool fresh = !in_cycle[c];
    do {
      in_cycle[c] = true;
      c = f[c];
    } while (c != cur);
    if (fresh) out.cycle_lcm = std::lcm<std::uint64_t>(out.cycle_lcm, len);
  }
  for (std::size_t a = 0; a < d; ++a) {
    std::size_t cur = a, t = 0;
    while (!in_cycle[cur]) {
      cur = f[cur];
      ++t;
    }
    out.max_tail = std::max(out.max_tail, t);
  }
  return out;
}

}  // namespace

NormalizedPower normalize_power(const Substitution& s) {
  std::vector<Letter> pre(s.size()), suf(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    pre[a] = s.first(static_cast<Letter>(a));
    suf[a] = s.last(static_cast<Letter>(a));
  }
  MapShape sp = shape(pre), ss = shape(suf);
  std::uint64_t lcm = std::lcm(sp.cycle_lcm, ss.cycle_lcm);
  std::uint64_t n = lcm;
  std::size_t tail = std::max(sp.max_tail, ss.max_tail);
  while (n < tail) n += lcm;
  return NormalizedPower{static_cast<int>(n), power(s, static_cast<int>(n))};
}

Word expand_fixed_point(const FixedPointHandle& h, std::size_t len) {
  require(len >= 1, errc::precondition, "length must be positive");
  const Substitution& s = h.sub;
  Word w = word_of(h.seed);
  while (w.size() < len) {
    // Grow only the needed end; truncating keeps iterates small.
    Word next = s.apply(w);
    if (next.size() == w.size())
      fail(errc::precondition, "letter '" + s.alphabet().name(h.seed) +
                                   "' does not generate a growing fixed point");
    if (h.side == Side::right) {
      if (next.size() > 4 * len) next.resize(4 * len);
    } else {
      if (next.size() > 4 * len) next.erase(0, next.size() - 4 * len);
    }
    w = std::move(next);
  }
  if (h.side == Side::right) return w.substr(0, len);
  return w.substr(w.size() - len);
}

}  // namespace subshift
