#pragma once

#include <json.hpp>

#include "subshift/branch.hpp"
#include "subshift/bratteli.hpp"
#include "subshift/recognizability.hpp"
#include "subshift/transforms.hpp"

namespace subshift {

using json = nlohmann::json;

inline json rules_json(const Substitution& s) {
  json rules = json::object();
  for (std::size_t a = 0; a < s.size(); ++a)
    rules[s.alphabet().name(static_cast<Letter>(a))] =
        s.alphabet().format(s.image(static_cast<Letter>(a)));
  return json{{"rules", rules}};
}

inline json letters_json(const Alphabet& ab, const std::vector<Letter>& ls) {
  json out = json::array();
  for (Letter l : ls) out.push_back(ab.name(l));
  return out;
}

inline json branch_report_json(const Alphabet& ab, const BranchReport& rep) {
  json points = json::array();
  for (const auto& pt : rep.points) {
    json p;
    p["kind"] = pt.is_fixed() ? "fixed" : "nonfixed";
    if (pt.is_fixed()) p["seed"] = ab.name(*pt.seed);
    if (pt.equation)
      p["equation"] = {{"w", ab.format(pt.equation->w)}, {"p", pt.equation->p}};
    p["multiplicity"] = pt.multiplicity;
    p["predecessors"] = letters_json(ab, pt.predecessors);
    p["prefix"] = ab.format(pt.prefix);
    points.push_back(std::move(p));
  }
  return json{{"points", std::move(points)},
              {"N", rep.total_preimages},
              {"n", rep.points.size()},
              {"quasi_invertible", rep.quasi_invertible}};
}

inline json closing_report_json(const Alphabet& ab, const ClosingReport& rep) {
  json pairing = json::object();
  for (const auto& [v, w] : rep.pairing) pairing[ab.name(v)] = ab.name(w);
  json witnesses = json::object();
  for (const auto& [v, ws] : rep.witnesses) witnesses[ab.name(v)] = letters_json(ab, ws);
  return json{{"verdict", rep.closing ? "closing" : "not_closing"},
              {"pairing", std::move(pairing)},
              {"witnesses", std::move(witnesses)},
              {"max", letters_json(ab, rep.max_vertices)},
              {"min", letters_json(ab, rep.min_vertices)}};
}

inline json recognizability_json(const Alphabet& ab, const RecognizabilityReport& rep) {
  json out{{"checked_up_to", rep.checked_up_to},
           {"verdict", rep.recognizable ? "recognizable-up-to-bound" : "counterexample"}};
  if (rep.witness)
    out["witness"] = {{"a", ab.name(rep.witness->a)},
                      {"b", ab.name(rep.witness->b)},
                      {"w", ab.format(rep.witness->w)}};
  return out;
}

inline const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::induced: return "induced";
    case Provenance::properized: return "properized";
    case Provenance::two_block: return "two_block";
    case Provenance::pipeline: return "pipeline";
  }
  return "?";
}

inline json derived_json(const Substitution& input, const DerivedSubstitution& d) {
  return json{{"provenance", provenance_name(d.provenance)},
              {"input", rules_json(input)},
              {"output", rules_json(d.result)},
              {"verified", d.checks}};
}

}  // namespace subshift
