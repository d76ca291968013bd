#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "subshift/language.hpp"
#include "subshift/substitution.hpp"

namespace subshift {

/// Stationary ordered Bratteli diagram read off a substitution: one vertex
/// per letter at every level >= 1, and the ordered incoming edges of vertex a
/// are the letters of tau(a) in order. first_level holds the edge counts
/// from the root to each level-1 vertex.
struct OrderedBratteliDiagram {
  Substitution order;
  std::vector<std::uint64_t> first_level;

  const Alphabet& alphabet() const { return order.alphabet(); }
  std::size_t vertex_count() const { return order.size(); }
  const Word& incoming(Letter a) const { return order.image(a); }
  std::size_t degree(Letter a) const { return order.image(a).size(); }
};

OrderedBratteliDiagram diagram_from_substitution(const Substitution& s);

/// Collapses k levels into one: the diagram of tau^k, with first-level
/// multiplicities recounted as root-to-level-k paths.
OrderedBratteliDiagram telescope(const OrderedBratteliDiagram& d, int k);

struct ExtremalVertices {
  std::vector<Letter> max_vertices;  // left-fixed letters: determine maximal paths
  std::vector<Letter> min_vertices;  // right-fixed letters: determine minimal paths
};

/// Requires a normalized substitution so extremal paths are shift-fixed.
ExtremalVertices extremal_vertices(const Substitution& s);

struct ClosingReport {
  bool closing = false;
  std::vector<Letter> max_vertices;
  std::vector<Letter> min_vertices;
  std::map<Letter, Letter> pairing;                    // v_i -> the unique following w_j
  std::map<Letter, std::vector<Letter>> witnesses;     // failing v_i -> its followers
  int normalized_exponent = 1;                         // power used for the check
};

/// Continuity test for the Vershik map: each maximal-determining vertex must
/// be followed in the language by exactly one minimal-determining vertex.
/// Works on the normalized power (the verdict is power-invariant).
ClosingReport closing_check(const Substitution& s, const LanguageTable& lang);

/// Deterministic DOT rendering of the first `levels` levels.
std::string export_dot(const OrderedBratteliDiagram& d, int levels);

}  // namespace subshift
