#include <algorithm>
#include <set>

#include "subshift/transforms.hpp"

namespace subshift {

namespace {

std::vector<Word> scan_return_words(const Word& u, Letter base) {
  std::vector<Word> order;
  std::set<Word> seen;
  std::size_t prev = Word::npos;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (at(u, i) != base) continue;
    if (prev != Word::npos) {
      Word w = u.substr(prev, i - prev);
      if (seen.insert(w).second) order.push_back(w);
    }
    prev = i;
  }
  return order;
}

}  // namespace

ReturnWordSystem return_words(const Substitution& s, Letter base, ReturnWordOptions opts) {
  require(s.first(base) == base, errc::precondition,
          "'" + s.alphabet().name(base) +
              "' does not generate a right fixed point (normalize first)");
  require(!bounded_letters(s)[base], errc::precondition,
          "'" + s.alphabet().name(base) + "' does not generate a growing fixed point");

  FixedPointHandle h = fixed_point_handle(s, base, Side::right);
  std::size_t scan = opts.initial_scan;
  std::vector<Word> cur = scan_return_words(expand_fixed_point(h, scan), base);
  while (scan <= opts.scan_cap / 2) {
    std::vector<Word> next = scan_return_words(expand_fixed_point(h, 2 * scan), base);
    if (next == cur) return ReturnWordSystem{base, cur, scan};
    cur = std::move(next);
    scan *= 2;
  }
  fail(errc::cap, "return-word set did not stabilize within the scan cap");
}

Word psi(const ReturnWordSystem& rws, const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t j = at(w, i);
    require(j >= 1 && j <= rws.words.size(), errc::precondition, "return index out of range");
    out += rws.words[j - 1];
  }
  return out;
}

DerivedSubstitution induced_substitution(const Substitution& s, const ReturnWordSystem& rws) {
  const std::size_t r = rws.words.size();
  require(r >= 1 && r < Alphabet::max_size, errc::precondition, "bad return-word system");

  // index words so the decomposition below is a lookup
  std::map<Word, Letter> index;
  for (std::size_t j = 0; j < r; ++j) index[rws.words[j]] = static_cast<Letter>(j + 1);

  auto decompose = [&](const Word& w) -> Word {
    Word out;
    std::size_t prev = Word::npos;
    for (std::size_t i = 0; i <= w.size(); ++i) {
      bool boundary = i == w.size() || at(w, i) == rws.base;
      if (!boundary) continue;
      if (prev != Word::npos) {
        auto it = index.find(w.substr(prev, i - prev));
        if (it == index.end())
          fail(errc::precondition,
               "decomposition failure: return-word set not stabilized or substitution not "
               "recognizable");
        out += static_cast<char>(it->second);
      } else {
        require(i == 0, errc::precondition, "image does not start with the base letter");
      }
      prev = i;
    }
    return out;
  };

  auto alphabet = std::make_shared<Alphabet>();
  for (std::size_t j = 1; j <= r; ++j) alphabet->intern(std::to_string(j));

  std::vector<Word> images(r);
  for (std::size_t j = 1; j <= r; ++j) {
    Word decomposed = decompose(s.apply(rws.words[j - 1]));
    Word img;
    for (std::size_t i = 0; i < decomposed.size(); ++i)
      img += static_cast<char>(at(decomposed, i) - 1);  // alphabet ids are 0-based
    images[j - 1] = img;
  }
  DerivedSubstitution out{Substitution(alphabet, std::move(images)), Provenance::induced, {}};

  // psi . tau_1 = tau . psi on letters (longer words follow by concatenation)
  for (std::size_t j = 1; j <= r; ++j) {
    Word lhs;
    for (std::size_t i = 0; i < out.result.image(static_cast<Letter>(j - 1)).size(); ++i)
      lhs += rws.words[at(out.result.image(static_cast<Letter>(j - 1)), i)];
    Word rhs = s.apply(rws.words[j - 1]);
    require(lhs == rhs, errc::precondition, "induction identity psi.tau1 = tau.psi failed");
  }
  out.checks.push_back("psi(tau1(j)) = tau(psi(j)) for all return indices");
  return out;
}

}  // namespace subshift
