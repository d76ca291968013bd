#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "subshift/errors.hpp"

namespace subshift {

/// A letter is a dense index into an Alphabet.
using Letter = std::uint8_t;

/// A word is a sequence of letter ids packed into a byte string.
/// Positions are 0-based internally; reports use the alphabet's display names.
using Word = std::string;

inline Word word_of(Letter l) { return Word(1, static_cast<char>(l)); }
inline Letter at(const Word& w, std::size_t i) { return static_cast<Letter>(static_cast<unsigned char>(w[i])); }
inline Letter front(const Word& w) { return at(w, 0); }
inline Letter back(const Word& w) { return at(w, w.size() - 1); }

/// Finite alphabet with unique printable display names.
class Alphabet {
 public:
  static constexpr std::size_t max_size = 255;

  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> names) {
    for (auto& n : names) intern(std::move(n));
  }

  Letter intern(std::string name) {
    require(!name.empty(), errc::parse, "empty letter name");
    if (auto it = index_.find(name); it != index_.end())
      fail(errc::parse, "duplicate letter '" + name + "'");
    require(names_.size() < max_size, errc::cap, "alphabet exceeds 255 letters");
    Letter id = static_cast<Letter>(names_.size());
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    return id;
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter l) const { return names_.at(l); }

  std::optional<Letter> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool single_char_names() const {
    for (const auto& n : names_)
      if (n.size() != 1) return false;
    return true;
  }

  /// Render a word with display names. Single-char alphabets concatenate,
  /// anything else joins with spaces so the output stays parseable.
  std::string format(const Word& w) const {
    const bool tight = single_char_names();
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!tight && i) out += ' ';
      out += name(at(w, i));
    }
    return out;
  }

  std::string format(Letter l) const { return name(l); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

}  // namespace subshift
