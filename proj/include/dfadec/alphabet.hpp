#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dfadec {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Ordered list of distinct symbol labels. Symbol values index into it.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Symbol s) const;
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<Symbol> find(std::string_view label) const;

  /// Like find(), but throws InputError naming the unknown label.
  Symbol require(std::string_view label) const;

  bool operator==(const Alphabet&) const = default;

private:
  std::vector<std::string> labels_;
};

/// Length-then-content order; the canonical word order used throughout.
bool shortlex_less(const Word& a, const Word& b);

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

/// Space-separated labels, "eps" for the empty word. Diagnostics only.
std::string format_word(const Alphabet& alphabet, const Word& word);

}  // namespace dfadec
