#include <algorithm>
#include <set>

#include "subshift/transforms.hpp"

namespace subshift {

Word TwoBlockCode::recode(const Word& w) const {
  require(w.size() >= 2, errc::precondition, "recode needs at least 2 letters");
  Word out;
  out.reserve(w.size() - 1);
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    auto it = phi.find(w.substr(i, 2));
    require(it != phi.end(), errc::precondition, "2-word outside the coded language");
    out += static_cast<char>(it->second);
  }
  return out;
}

namespace {

std::vector<Word> sorted_two_words(const LanguageTable& lang) {
  std::vector<Word> out(lang.of_length(2).begin(), lang.of_length(2).end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TwoBlockResult two_block_closing(const Substitution& s, const LanguageTable& lang) {
  require(lang.max_len() >= 2, errc::precondition, "language table must cover length 2");

  NormalizedPower norm = normalize_power(s);
  const Substitution& rho = norm.sub;
  StructuralPredicates preds = structural_predicates(s);
  const bool permutative = preds.prefix_permutative && preds.suffix_permutative;

  // Every branch point must be fixed; the construction does not cover the rest.
  {
    BranchOptions bopts;
    bopts.check_recognizability = false;
    std::size_t approx = std::min<std::size_t>(lang.max_len() - 1, 64);
    BranchReport rep = enumerate_branch_points(rho, lang, approx, bopts);
    for (const auto& pt : rep.points)
      if (!pt.is_fixed())
        fail(errc::precondition,
             "a branch point is not fixed; the 2-block construction does not apply");
  }

  std::vector<Word> two = sorted_two_words(lang);
  require(two.size() <= Alphabet::max_size, errc::cap, "2-word count exceeds the alphabet cap");

  TwoBlockCode code;
  auto target = std::make_shared<Alphabet>();
  std::vector<bool> bounded = bounded_letters(rho);

  if (permutative) {
    // digits in lexicographic order, as in the permutative theorem
    code.two_words = two;
    for (std::size_t i = 0; i < two.size(); ++i) target->intern(std::to_string(i));
    code.target = target;
    for (std::size_t i = 0; i < two.size(); ++i)
      code.phi[two[i]] = static_cast<Letter>(i);
    for (Letter seed : fixed_point_letters(rho, Side::right))
      if (!bounded[seed])
        code.fixed_images.push_back(code.phi.at(
            expand_fixed_point(fixed_point_handle(rho, seed, Side::right), 2)));
  } else {
    // role-tagged: m_i for the fixed-point homes, M_l for their other
    // predecessor pairs, then the remaining 2-words lexicographically
    std::vector<Word> homes, pred_pairs, rest;
    std::set<Word> taken;
    std::vector<Letter> seeds;
    for (Letter seed : fixed_point_letters(rho, Side::right))
      if (!bounded[seed]) seeds.push_back(seed);
    require(!seeds.empty(), errc::precondition, "no growing fixed point");
    for (Letter seed : seeds) {
      Word home = expand_fixed_point(fixed_point_handle(rho, seed, Side::right), 2);
      homes.push_back(home);
      taken.insert(home);
    }
    for (Letter seed : seeds) {
      FixedBranch fb = fixed_branch_multiplicity(rho, lang, seed);
      for (Letter pre : fb.predecessors) {
        Word pair = word_of(pre) + word_of(seed);
        if (taken.insert(pair).second) pred_pairs.push_back(pair);
      }
    }
    for (const auto& w : two)
      if (!taken.count(w)) rest.push_back(w);

    auto add = [&](const Word& w, const std::string& name, std::vector<Letter>* roles) {
      Letter id = target->intern(name);
      code.phi[w] = id;
      code.two_words.push_back(w);
      if (roles) roles->push_back(id);
    };
    for (std::size_t i = 0; i < homes.size(); ++i)
      add(homes[i], "m" + std::to_string(i + 1), &code.fixed_images);
    for (std::size_t i = 0; i < pred_pairs.size(); ++i)
      add(pred_pairs[i], "M" + std::to_string(i + 1), &code.predecessor_images);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      std::string name = rest.size() <= 26 ? std::string(1, static_cast<char>('a' + i))
                                           : "r" + std::to_string(i + 1);
      add(rest[i], name, nullptr);
    }
    code.target = target;
  }

  // tau'(phi(ij)) = phi(tau(i)) . tail, with tail = phi(ij) in the
  // permutative case and phi(s^i p^j) in general
  std::vector<Word> images(code.two_words.size());
  for (const auto& [w2, a] : code.phi) {
    Letter i = front(w2), j = back(w2);
    Word img = code.recode(rho.image(i));
    if (permutative) {
      img += static_cast<char>(a);
    } else {
      Word sp = word_of(rho.last(i)) + word_of(rho.first(j));
      auto it = code.phi.find(sp);
      require(it != code.phi.end(), errc::precondition, "boundary 2-word missing from phi");
      img += static_cast<char>(it->second);
    }
    images[a] = std::move(img);
  }
  DerivedSubstitution derived{Substitution(code.target, std::move(images)),
                              Provenance::two_block,
                              {}};

  // Claim-3 identity to depth 4: tau'^n(alpha) minus its last letter equals
  // phi(tau^n(i_alpha))
  for (int n = 1; n <= 4; ++n) {
    Substitution tpn = power(derived.result, n);
    Substitution rn = power(rho, n);
    for (const auto& [w2, a] : code.phi) {
      const Word& img = tpn.image(a);
      if (rn.image(front(w2)).size() < 2) continue;
      require(img.substr(0, img.size() - 1) == code.recode(rn.image(front(w2))),
              errc::precondition, "2-block image identity failed");
    }
  }
  derived.checks.push_back("tau'^n(phi(ij)) drops one letter to phi(tau^n(i)), n <= 4");

  // Phi transports each fixed point of rho to the matching fixed point of tau'
  {
    const std::size_t len = 1000;
    std::size_t k = 0;
    for (Letter seed : fixed_point_letters(rho, Side::right)) {
      if (bounded[seed]) continue;
      Word u = expand_fixed_point(fixed_point_handle(rho, seed, Side::right), len + 1);
      Letter m = code.phi.at(u.substr(0, 2));
      Word v = expand_fixed_point(fixed_point_handle(derived.result, m, Side::right), len);
      require(code.recode(u) == v, errc::precondition,
              "2-block fixed-point transport failed");
      ++k;
    }
    derived.checks.push_back("Phi maps all " + std::to_string(k) +
                             " fixed points onto tau' fixed points (length 1000)");
  }
  return TwoBlockResult{std::move(code), std::move(derived), rho, norm.exponent};
}

}  // namespace subshift
