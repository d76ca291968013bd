#include "subshift/parse.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace subshift {

namespace {

std::string strip(std::string_view v) {
  std::size_t b = v.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = v.find_last_not_of(" \t\r");
  return std::string(v.substr(b, e - b + 1));
}

std::vector<std::string> tokenize(const std::string& rhs, bool tokens) {
  std::vector<std::string> out;
  if (tokens) {
    std::istringstream in(rhs);
    std::string tok;
    while (in >> tok) out.push_back(tok);
  } else {
    for (char c : rhs) {
      if (c == ' ' || c == '\t') continue;
      out.emplace_back(1, c);
    }
  }
  return out;
}

Substitution build(const std::vector<std::pair<std::string, std::vector<std::string>>>& rules) {
  auto alphabet = std::make_shared<Alphabet>();
  for (const auto& [head, rhs] : rules) {
    (void)rhs;
    alphabet->intern(head);  // throws on duplicate head
  }
  std::vector<Word> images;
  images.reserve(rules.size());
  for (const auto& [head, rhs] : rules) {
    require(!rhs.empty(), errc::parse, "empty image for letter '" + head + "'");
    Word img;
    for (const auto& tok : rhs) {
      auto id = alphabet->find(tok);
      if (!id) fail(errc::parse, "letter '" + tok + "' used in an image has no rule");
      img += static_cast<char>(*id);
    }
    images.push_back(std::move(img));
  }
  require(!images.empty(), errc::parse, "no rules");
  return Substitution(alphabet, std::move(images));
}

}  // namespace

Substitution parse_substitution(std::string_view text, ParseOptions opts) {
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ';', '\n');

  std::vector<std::pair<std::string, std::vector<std::string>>> rules;
  std::istringstream in(normalized);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string trimmed = strip(line);
    if (trimmed.empty()) continue;
    std::size_t arrow = trimmed.find("->");
    require(arrow != std::string::npos, errc::parse, "missing '->' in rule: " + trimmed);
    std::string head = strip(trimmed.substr(0, arrow));
    std::string rhs = strip(trimmed.substr(arrow + 2));
    require(!head.empty(), errc::parse, "missing rule head: " + trimmed);
    if (!opts.tokens)
      require(head.size() == 1, errc::parse,
              "multi-character letter '" + head + "' requires --tokens");
    rules.emplace_back(head, tokenize(rhs, opts.tokens));
  }
  return build(rules);
}

Substitution parse_substitution_json(std::string_view json_text, ParseOptions opts) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse, std::string("invalid JSON: ") + e.what());
  }
  require(j.contains("rules") && j["rules"].is_object(), errc::parse,
          "JSON ruleset must be {\"rules\": {...}}");
  std::vector<std::pair<std::string, std::vector<std::string>>> rules;
  for (auto it = j["rules"].begin(); it != j["rules"].end(); ++it) {
    require(it.value().is_string(), errc::parse, "rule images must be strings");
    rules.emplace_back(it.key(), tokenize(it.value().get<std::string>(), opts.tokens));
  }
  return build(rules);
}

}  // namespace subshift
