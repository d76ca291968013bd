// Command-line front end: parse rulesets, run the analyses, emit reports.
//
// Exit codes: 0 ok, 1 parse error, 2 precondition violation, 3 cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "subshift/json_io.hpp"
#include "subshift/recognizability.hpp"
#include "subshift/synthesize.hpp"
#include "subshift/vershik.hpp"

namespace ss = subshift;

namespace {

struct CommonOpts {
  std::string input = "-";
  bool json = false;
  bool tokens = false;
  std::size_t max_len = 64;
  std::size_t approx_len = 256;
  std::size_t depth = 32;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) ss::fail(ss::errc::parse, "cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ss::Substitution load(const CommonOpts& c) {
  std::string text = read_input(c.input);
  ss::ParseOptions p{c.tokens};
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{'))
    return ss::parse_substitution_json(text, p);
  return ss::parse_substitution(text, p);
}

std::size_t clamp_approx(const CommonOpts& c) {
  if (c.approx_len + 1 > c.max_len) {
    std::cerr << "note: --approx-len clamped to " << c.max_len - 1
              << " (language table bound --max-len " << c.max_len << ")\n";
    return c.max_len - 1;
  }
  return c.approx_len;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("input", c.input, "ruleset file, or - for stdin")->default_val("-");
  cmd->add_flag("--json", c.json, "emit JSON");
  cmd->add_flag("--tokens", c.tokens, "whitespace-separated multi-character letters");
  cmd->add_option("--max-len", c.max_len, "language table length bound")->default_val(64);
  cmd->add_option("--approx-len", c.approx_len, "branch point approximation length")
      ->default_val(256);
  cmd->add_option("--depth", c.depth, "path depth bound / saturation depth cap")
      ->default_val(32);
}

void print_predicates(const ss::Substitution& s) {
  auto p = ss::structural_predicates(s);
  std::cout << "left proper:         " << (p.left_proper ? "yes" : "no") << '\n'
            << "right proper:        " << (p.right_proper ? "yes" : "no") << '\n'
            << "prefix permutative:  " << (p.prefix_permutative ? "yes" : "no") << '\n'
            << "suffix permutative:  " << (p.suffix_permutative ? "yes" : "no") << '\n'
            << "injective:           " << (p.injective_on_letters ? "yes" : "no") << '\n';
}

int cmd_analyze(const CommonOpts& c) {
  ss::Substitution s = load(c);
  auto m = ss::incidence_matrix(s);
  auto norm = ss::normalize_power(s);
  auto rec = ss::is_recognizable_up_to(s, 32);
  if (c.json) {
    ss::json out = ss::rules_json(s);
    auto p = ss::structural_predicates(s);
    out["predicates"] = {{"left_proper", p.left_proper},
                         {"right_proper", p.right_proper},
                         {"prefix_permutative", p.prefix_permutative},
                         {"suffix_permutative", p.suffix_permutative},
                         {"injective_on_letters", p.injective_on_letters}};
    out["primitive"] = ss::is_primitive(s);
    ss::json rows = ss::json::array();
    for (std::size_t i = 0; i < m.dim; ++i) {
      ss::json row = ss::json::array();
      for (std::size_t j = 0; j < m.dim; ++j) row.push_back(m.at(i, j));
      rows.push_back(std::move(row));
    }
    out["incidence_matrix"] = std::move(rows);
    out["normalized_power"] = norm.exponent;
    out["right_fixed"] = ss::letters_json(s.alphabet(), ss::fixed_point_letters(s, ss::Side::right));
    out["left_fixed"] = ss::letters_json(s.alphabet(), ss::fixed_point_letters(s, ss::Side::left));
    out["recognizability"] = ss::recognizability_json(s.alphabet(), rec);
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << s.format();
  print_predicates(s);
  std::cout << "primitive:           " << (ss::is_primitive(s) ? "yes" : "no") << '\n';
  std::cout << "incidence matrix:\n";
  for (std::size_t i = 0; i < m.dim; ++i) {
    std::cout << " ";
    for (std::size_t j = 0; j < m.dim; ++j) std::cout << ' ' << m.at(i, j);
    std::cout << '\n';
  }
  std::cout << "normalizing power:   " << norm.exponent << '\n';
  std::cout << "right fixed letters:";
  for (auto l : ss::fixed_point_letters(s, ss::Side::right))
    std::cout << ' ' << s.alphabet().name(l);
  std::cout << "\nleft fixed letters: ";
  for (auto l : ss::fixed_point_letters(s, ss::Side::left))
    std::cout << ' ' << s.alphabet().name(l);
  std::cout << "\nrecognizable up to 32: " << (rec.recognizable ? "yes" : "counterexample found")
            << '\n';
  return 0;
}

int cmd_branch_points(const CommonOpts& c, bool normalize) {
  ss::Substitution s = load(c);
  ss::Substitution target = normalize ? ss::normalize_power(s).sub : s;
  std::size_t approx = clamp_approx(c);
  ss::LanguageTable lang = ss::language(target, approx + 1);
  ss::BranchReport rep = ss::enumerate_branch_points(target, lang, approx);
  if (c.json) {
    std::cout << ss::branch_report_json(target.alphabet(), rep).dump(2) << '\n';
    return 0;
  }
  const auto& ab = target.alphabet();
  std::cout << "(N,n) = (" << rep.total_preimages << "," << rep.points.size() << ")"
            << (rep.quasi_invertible ? ", quasi-invertible" : "") << '\n';
  for (const auto& pt : rep.points) {
    if (pt.is_fixed())
      std::cout << "fixed point at '" << ab.name(*pt.seed) << "'";
    else
      std::cout << "nonfixed point  w=" << ab.format(pt.equation->w)
                << "  p=" << pt.equation->p;
    std::cout << "  multiplicity " << pt.multiplicity << "  predecessors {";
    for (std::size_t i = 0; i < pt.predecessors.size(); ++i)
      std::cout << (i ? "," : "") << ab.name(pt.predecessors[i]);
    std::cout << "}  prefix " << ab.format(pt.prefix.substr(0, 24)) << "...\n";
  }
  for (const auto& w : rep.warnings) std::cout << "warning: " << w << '\n';
  return 0;
}

int cmd_closing(const CommonOpts& c) {
  ss::Substitution s = load(c);
  ss::LanguageTable lang = ss::language(s, std::max<std::size_t>(c.max_len, 2));
  ss::ClosingReport rep = ss::closing_check(s, lang);
  const auto& ab = s.alphabet();
  if (c.json) {
    std::cout << ss::closing_report_json(ab, rep).dump(2) << '\n';
    return 0;
  }
  std::cout << "verdict: " << (rep.closing ? "closing" : "not closing") << '\n';
  if (rep.normalized_exponent > 1)
    std::cout << "checked on the normalized power " << rep.normalized_exponent << '\n';
  std::cout << "max vertices:";
  for (auto l : rep.max_vertices) std::cout << ' ' << ab.name(l);
  std::cout << "\nmin vertices:";
  for (auto l : rep.min_vertices) std::cout << ' ' << ab.name(l);
  std::cout << '\n';
  for (const auto& [v, w] : rep.pairing)
    std::cout << "  " << ab.name(v) << " -> " << ab.name(w) << '\n';
  for (const auto& [v, ws] : rep.witnesses) {
    std::cout << "  " << ab.name(v) << " followed by {";
    for (std::size_t i = 0; i < ws.size(); ++i) std::cout << (i ? "," : "") << ab.name(ws[i]);
    std::cout << "}\n";
  }
  return 0;
}

int cmd_diagram(const CommonOpts& c, int levels, bool dot) {
  ss::Substitution s = load(c);
  ss::OrderedBratteliDiagram d = ss::diagram_from_substitution(s);
  if (dot) {
    std::cout << ss::export_dot(d, levels);
    return 0;
  }
  ss::json out = ss::rules_json(s);
  out["first_level"] = d.first_level;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_transform(const CommonOpts& c, const std::string& mode, const std::string& base_name) {
  ss::Substitution s = load(c);
  if (mode == "induce") {
    ss::Letter base = 0;
    if (!base_name.empty()) {
      auto l = s.alphabet().find(base_name);
      if (!l) ss::fail(ss::errc::parse, "unknown letter '" + base_name + "'");
      base = *l;
    } else {
      auto fixed = ss::fixed_point_letters(s, ss::Side::right);
      if (fixed.empty()) ss::fail(ss::errc::precondition, "no right fixed letter to induce on");
      base = fixed.front();
    }
    ss::ReturnWordSystem rws = ss::return_words(s, base);
    ss::DerivedSubstitution d = ss::induced_substitution(s, rws);
    if (c.json) {
      ss::json out = ss::derived_json(s, d);
      ss::json words = ss::json::array();
      for (const auto& w : rws.words) words.push_back(s.alphabet().format(w));
      out["psi"] = std::move(words);
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "return words to '" << s.alphabet().name(base) << "':";
      for (const auto& w : rws.words) std::cout << ' ' << s.alphabet().format(w);
      std::cout << "\ninduced substitution:\n" << d.result.format();
    }
    return 0;
  }
  if (mode == "properize") {
    ss::DerivedSubstitution d = ss::left_properize(s);
    if (c.json)
      std::cout << ss::derived_json(s, d).dump(2) << '\n';
    else
      std::cout << d.result.format();
    return 0;
  }
  if (mode == "two-block") {
    ss::LanguageTable lang = ss::language(s, std::max<std::size_t>(c.max_len, 34));
    ss::TwoBlockResult tb = ss::two_block_closing(s, lang);
    if (c.json) {
      ss::json out = ss::derived_json(tb.normalized_source, tb.derived);
      ss::json phi = ss::json::object();
      for (const auto& [w, l] : tb.code.phi)
        phi[tb.normalized_source.alphabet().format(w)] = tb.code.target->name(l);
      out["phi"] = std::move(phi);
      out["normalized_power"] = tb.normalized_exponent;
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "phi (2-word -> letter):\n";
      for (const auto& [w, l] : tb.code.phi)
        std::cout << "  " << tb.normalized_source.alphabet().format(w) << " -> "
                  << tb.code.target->name(l) << '\n';
      std::cout << "tau':\n" << tb.derived.result.format();
    }
    return 0;
  }
  if (mode == "pipeline") {
    ss::PipelineResult pr = ss::adic_pipeline(s);
    const auto& ab = pr.diagram.alphabet();
    if (c.json) {
      ss::json steps = ss::json::array();
      for (const auto& d : pr.derivation) steps.push_back(ss::derived_json(s, d));
      ss::json out{{"derivation", std::move(steps)},
                   {"diagram", ss::rules_json(pr.diagram.order)},
                   {"first_level", pr.diagram.first_level},
                   {"closing", ss::closing_report_json(ab, pr.closing)}};
      std::cout << out.dump(2) << '\n';
    } else {
      for (const auto& d : pr.derivation)
        std::cout << "step: " << ss::provenance_name(d.provenance) << "\n"
                  << d.result.format();
      std::cout << "first level multiplicities:";
      for (auto f : pr.diagram.first_level) std::cout << ' ' << f;
      std::cout << "\nclosing: " << (pr.closing.closing ? "yes" : "no") << '\n';
    }
    return 0;
  }
  ss::fail(ss::errc::parse, "unknown transform mode '" + mode + "'");
}

int cmd_synthesize(std::size_t n, const std::vector<std::string>& pairs, bool json_out) {
  std::vector<ss::ProfileEntry> profile;
  for (const auto& p : pairs) {
    auto comma = p.find(',');
    if (comma == std::string::npos)
      ss::fail(ss::errc::parse, "profile entries look like k,j (got '" + p + "')");
    try {
      profile.push_back(ss::ProfileEntry{std::stoul(p.substr(0, comma)),
                                         std::stoul(p.substr(comma + 1))});
    } catch (const std::exception&) {
      ss::fail(ss::errc::parse, "profile entries look like k,j (got '" + p + "')");
    }
  }
  ss::SynthesisResult r = ss::synthesize_branch_profile(n, profile);
  if (json_out) {
    ss::json out = ss::rules_json(r.sub);
    out["verified"] = ss::branch_report_json(r.sub.alphabet(), r.verification);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << r.sub.format();
  }
  return 0;
}

// Cross-checks every report against the brute-force language oracle.
int cmd_verify(const CommonOpts& c) {
  ss::Substitution s = load(c);
  bool all_ok = true;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
    all_ok = all_ok && ok;
  };

  check("primitive or minimal-with-fixed-point", [&] {
    if (ss::is_primitive(s)) return true;
    auto norm = ss::normalize_power(s);
    auto bounded = ss::bounded_letters(norm.sub);
    for (auto l : ss::fixed_point_letters(norm.sub, ss::Side::right))
      if (!bounded[l]) return true;
    return false;
  }());

  auto rec = ss::is_recognizable_up_to(s, 32);
  check("recognizable-up-to-32", rec.recognizable);

  auto norm = ss::normalize_power(s);
  std::size_t approx = 24;
  ss::LanguageTable lang = ss::language(norm.sub, approx + 2);
  ss::BranchReport rep = ss::enumerate_branch_points(norm.sub, lang, approx);

  // every reported point must carry its oracle predecessor count
  bool preds_ok = true;
  for (const auto& pt : rep.points) {
    auto preds = ss::predecessor_letters(lang, pt.prefix.substr(0, approx));
    preds_ok = preds_ok && preds == pt.predecessors;
  }
  check("branch multiplicities match the language oracle", preds_ok);

  // incidence of power = power of incidence
  bool inc_ok = true;
  for (int n = 2; n <= 4; ++n)
    inc_ok = inc_ok &&
             ss::incidence_matrix(ss::power(s, n)) == ss::matrix_power(ss::incidence_matrix(s), n);
  check("incidence_matrix(power(s,n)) = M^n (n <= 4)", inc_ok);

  bool closing_pow_ok = true;
  {
    ss::ClosingReport c1 = ss::closing_check(s, lang);
    for (int k = 2; k <= 3; ++k)
      closing_pow_ok = closing_pow_ok &&
                       ss::closing_check(ss::power(s, k), lang).closing == c1.closing;
  }
  check("closing verdict invariant under powers (k <= 3)", closing_pow_ok);

  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis of one-sided substitution subshifts"};
  app.require_subcommand(1);

  CommonOpts copt;
  bool normalize = false;
  int levels = 4;
  bool dot = true;
  std::string mode = "pipeline", base_name;
  std::size_t synth_n = 3;
  std::vector<std::string> synth_profile;
  bool synth_json = false;

  auto* analyze = app.add_subcommand("analyze", "structural report");
  add_common(analyze, copt);
  auto* branch = app.add_subcommand("branch-points", "find all branch points");
  add_common(branch, copt);
  branch->add_flag("--normalize", normalize, "analyze the normalized power");
  auto* closing = app.add_subcommand("closing", "closing check (continuous Vershik map)");
  add_common(closing, copt);
  auto* diagram = app.add_subcommand("diagram", "export the ordered Bratteli diagram");
  add_common(diagram, copt);
  diagram->add_option("--levels", levels, "levels to draw")->default_val(4);
  diagram->add_flag("--dot,!--no-dot", dot, "DOT output (default) or JSON");
  auto* transform = app.add_subcommand("transform", "derived substitutions");
  add_common(transform, copt);
  transform->add_option("--mode", mode, "induce|properize|two-block|pipeline")
      ->default_val("pipeline");
  transform->add_option("--base", base_name, "base letter for induction");
  auto* synthesize = app.add_subcommand("synthesize", "build a substitution with a branch profile");
  synthesize->add_option("--letters", synth_n, "alphabet size")->required();
  synthesize->add_option("--profile", synth_profile, "entries k,j")->required();
  synthesize->add_flag("--json", synth_json, "emit JSON");
  auto* verify = app.add_subcommand("verify", "oracle cross-checks");
  add_common(verify, copt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(copt);
    if (branch->parsed()) return cmd_branch_points(copt, normalize);
    if (closing->parsed()) return cmd_closing(copt);
    if (diagram->parsed()) return cmd_diagram(copt, levels, dot);
    if (transform->parsed()) return cmd_transform(copt, mode, base_name);
    if (synthesize->parsed()) return cmd_synthesize(synth_n, synth_profile, synth_json);
    if (verify->parsed()) return cmd_verify(copt);
  } catch (const ss::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
