#include "dfadec/alphabet.hpp"

#include <algorithm>
#include <unordered_set>

#include "dfadec/errors.hpp"

namespace dfadec {

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("alphabet labels must be non-empty");
    if (!seen.insert(l).second)
      throw InputError("duplicate alphabet label '" + l + "'");
  }
}

const std::string& Alphabet::label(Symbol s) const {
  if (s >= labels_.size()) throw InputError("symbol index out of range");
  return labels_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view label) const {
  for (Symbol s = 0; s < labels_.size(); ++s)
    if (labels_[s] == label) return s;
  return std::nullopt;
}

Symbol Alphabet::require(std::string_view label) const {
  if (auto s = find(label)) return *s;
  throw InputError("unknown symbol '" + std::string(label) + "'");
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string format_word(const Alphabet& alphabet, const Word& word) {
  if (word.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.label(word[i]);
  }
  return out;
}

}  // namespace dfadec
