#pragma once

#include <string_view>

#include "subshift/substitution.hpp"

namespace subshift {

struct ParseOptions {
  // Single-char letters by default; token mode reads whitespace-separated
  // multi-char letters on the right-hand sides.
  bool tokens = false;
};

/// Parses a ruleset: one `<letter> -> <word>` per line, `#` comments,
/// `;` accepted as a line separator. Alphabet ids follow rule order.
Substitution parse_substitution(std::string_view text, ParseOptions opts = {});

/// Parses the JSON mirror {"rules": {"a": "aab", ...}}. Keys are interned
/// in sorted order (JSON objects do not preserve insertion order).
Substitution parse_substitution_json(std::string_view json_text, ParseOptions opts = {});

}  // namespace subshift
