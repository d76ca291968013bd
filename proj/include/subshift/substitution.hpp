#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "subshift/alphabet.hpp"

namespace subshift {

/// A substitution maps every letter of its alphabet to a nonempty word.
/// It extends to words and one-sided sequences by concatenation; all
/// operations here are pure.
class Substitution {
 public:
  Substitution(AlphabetPtr alphabet, std::vector<Word> images)
      : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    require(alphabet_ != nullptr, errc::precondition, "null alphabet");
    require(images_.size() == alphabet_->size(), errc::precondition,
            "one image per letter required");
    for (std::size_t a = 0; a < images_.size(); ++a) {
      require(!images_[a].empty(), errc::parse,
              "empty image for letter '" + alphabet_->name(static_cast<Letter>(a)) + "'");
      for (std::size_t i = 0; i < images_[a].size(); ++i)
        require(at(images_[a], i) < alphabet_->size(), errc::parse,
                "image letter out of range");
    }
  }

  const Alphabet& alphabet() const { return *alphabet_; }
  AlphabetPtr alphabet_ptr() const { return alphabet_; }
  std::size_t size() const { return images_.size(); }

  const Word& image(Letter a) const { return images_.at(a); }
  Letter first(Letter a) const { return front(images_[a]); }
  Letter last(Letter a) const { return back(images_[a]); }

  Word apply(const Word& w) const {
    Word out;
    std::size_t total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) total += images_[at(w, i)].size();
    out.reserve(total);
    for (std::size_t i = 0; i < w.size(); ++i) out += images_[at(w, i)];
    return out;
  }

  bool operator==(const Substitution& o) const { return images_ == o.images_; }

  /// Formats as a one-rule-per-line ruleset.
  std::string format() const {
    std::string out;
    for (std::size_t a = 0; a < size(); ++a) {
      out += alphabet_->name(static_cast<Letter>(a));
      out += " -> ";
      out += alphabet_->format(images_[a]);
      out += '\n';
    }
    return out;
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<Word> images_;
};

/// Integer matrix m[i][j] = occurrences of letter j in the image of i.
struct IncidenceMatrix {
  std::size_t dim = 0;
  std::vector<std::uint64_t> entries;  // row-major

  std::uint64_t& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
  bool operator==(const IncidenceMatrix&) const = default;
};

struct StructuralPredicates {
  bool left_proper = false;
  bool right_proper = false;
  bool prefix_permutative = false;
  bool suffix_permutative = false;
  bool injective_on_letters = false;
};

enum class Side { right, left };

/// Seed letter for a one-sided fixed point: the image of `seed` begins
/// (right) or ends (left) with `seed`.
struct FixedPointHandle {
  Substitution sub;
  Letter seed;
  Side side;
};

struct NormalizedPower {
  int exponent;  // least N making prefix/suffix maps stable (see normalize_power)
  Substitution sub;
};

Substitution power(const Substitution& s, int n);
IncidenceMatrix incidence_matrix(const Substitution& s);
IncidenceMatrix matrix_power(const IncidenceMatrix& m, int n);
bool is_primitive(const Substitution& s);
StructuralPredicates structural_predicates(const Substitution& s);

/// Letters whose images stay bounded under iteration (e.g. 1 -> 1).
std::vector<bool> bounded_letters(const Substitution& s);

/// Letters l with tau(l) beginning (right) or ending (left) with l.
std::vector<Letter> fixed_point_letters(const Substitution& s, Side side);

/// Least N such that the first-letter and last-letter maps of tau^N fix
/// every letter they can reach in a cycle: every image of tau^N then starts
/// with a right-fixed letter and ends with a left-fixed one.
NormalizedPower normalize_power(const Substitution& s);

/// Length-len prefix (right) or suffix (left) of the one-sided fixed point.
Word expand_fixed_point(const FixedPointHandle& h, std::size_t len);

inline FixedPointHandle fixed_point_handle(const Substitution& s, Letter seed, Side side) {
  if (side == Side::right)
    require(s.first(seed) == seed, errc::precondition,
            "image of '" + s.alphabet().name(seed) + "' does not begin with it");
  else
    require(s.last(seed) == seed, errc::precondition,
            "image of '" + s.alphabet().name(seed) + "' does not end with it");
  return FixedPointHandle{s, seed, side};
}

}  // namespace subshift
