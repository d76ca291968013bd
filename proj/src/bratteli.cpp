#include "subshift/bratteli.hpp"

#include <algorithm>

namespace subshift {

OrderedBratteliDiagram diagram_from_substitution(const Substitution& s) {
  require(is_primitive(s), errc::precondition,
          "Bratteli diagram requires a primitive substitution");
  return OrderedBratteliDiagram{s, std::vector<std::uint64_t>(s.size(), 1)};
}

OrderedBratteliDiagram telescope(const OrderedBratteliDiagram& d, int k) {
  require(k >= 1, errc::precondition, "telescope requires k >= 1");
  if (k == 1) return d;
  OrderedBratteliDiagram out{power(d.order, k), {}};
  // paths from the root to level k: F^(k-1) applied to the old first level
  IncidenceMatrix m = matrix_power(incidence_matrix(d.order), k - 1);
  out.first_level.assign(d.vertex_count(), 0);
  for (std::size_t a = 0; a < d.vertex_count(); ++a)
    for (std::size_t b = 0; b < d.vertex_count(); ++b)
      out.first_level[a] += m.at(a, b) * d.first_level[b];
  return out;
}

ExtremalVertices extremal_vertices(const Substitution& s) {
  require(normalize_power(s).exponent == 1, errc::precondition,
          "substitution is not normalized; apply normalize_power first");
  return ExtremalVertices{fixed_point_letters(s, Side::left),
                          fixed_point_letters(s, Side::right)};
}

ClosingReport closing_check(const Substitution& s, const LanguageTable& lang) {
  require(lang.max_len() >= 2, errc::precondition, "language table must cover length 2");
  NormalizedPower norm = normalize_power(s);
  const Substitution& rho = norm.sub;

  ClosingReport rep;
  rep.normalized_exponent = norm.exponent;
  rep.max_vertices = fixed_point_letters(rho, Side::left);
  rep.min_vertices = fixed_point_letters(rho, Side::right);
  rep.closing = true;
  for (Letter v : rep.max_vertices) {
    std::vector<Letter> followers;
    for (Letter w : rep.min_vertices)
      if (lang.contains(word_of(v) + word_of(w))) followers.push_back(w);
    if (followers.size() == 1) {
      rep.pairing[v] = followers.front();
    } else {
      rep.closing = false;
      rep.witnesses[v] = followers;
    }
  }
  return rep;
}

std::string export_dot(const OrderedBratteliDiagram& d, int levels) {
  require(levels >= 2, errc::precondition, "need at least 2 levels");
  const Alphabet& ab = d.alphabet();
  std::string out = "digraph bratteli {\n  rankdir=BT;\n  v0 [shape=point];\n";
  for (int n = 1; n <= levels; ++n)
    for (std::size_t a = 0; a < d.vertex_count(); ++a)
      out += "  L" + std::to_string(n) + "_" + ab.name(static_cast<Letter>(a)) +
             " [label=\"" + ab.name(static_cast<Letter>(a)) + "\"];\n";
  for (std::size_t a = 0; a < d.vertex_count(); ++a)
    for (std::uint64_t i = 0; i < d.first_level[a]; ++i)
      out += "  v0 -> L1_" + ab.name(static_cast<Letter>(a)) + " [label=\"" +
             std::to_string(i) + "\"];\n";
  for (int n = 2; n <= levels; ++n)
    for (std::size_t a = 0; a < d.vertex_count(); ++a) {
      const Word& in = d.incoming(static_cast<Letter>(a));
      for (std::size_t i = 0; i < in.size(); ++i)
        out += "  L" + std::to_string(n - 1) + "_" + ab.name(at(in, i)) + " -> L" +
               std::to_string(n) + "_" + ab.name(static_cast<Letter>(a)) + " [label=\"" +
               std::to_string(i) + "\"];\n";
    }
  out += "}\n";
  return out;
}

}  // namespace subshift
