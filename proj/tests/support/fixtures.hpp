#pragma once

// Shared hand-built fixtures. The ordering DFAs here are constructed
// directly so tests can cross-check the generator and encoder against an
// independent construction.

#include <string_view>
#include <vector>

#include "dfadec/dfa.hpp"
#include "dfadec/sample.hpp"

namespace fixtures {

inline dfadec::Alphabet yrbn() { return dfadec::Alphabet({"y", "r", "b", "n"}); }

inline dfadec::Alphabet ab() { return dfadec::Alphabet({"a", "b"}); }

/// One-symbol-per-character word, e.g. word(yrbn(), "yrnb").
inline dfadec::Word word(const dfadec::Alphabet& alphabet, std::string_view chars) {
  dfadec::Word w;
  for (char c : chars) w.push_back(alphabet.require(std::string_view(&c, 1)));
  return w;
}

/// 3-state "observe `before`, then observe `after`" DFA: 0 waits for
/// before, 1 waits for a later after, 2 is done (accepting, absorbing).
inline dfadec::Dfa ordering_dfa(const dfadec::Alphabet& alphabet, dfadec::Symbol before,
                                dfadec::Symbol after) {
  const std::size_t sigma = alphabet.size();
  std::vector<dfadec::State> delta(3 * sigma);
  for (dfadec::Symbol a = 0; a < sigma; ++a) {
    delta[0 * sigma + a] = a == before ? 1u : 0u;
    delta[1 * sigma + a] = a == after ? 2u : 1u;
    delta[2 * sigma + a] = 2;
  }
  return dfadec::Dfa(alphabet, 3, 0, {2}, std::move(delta));
}

/// Safety variant: premature `after` jumps to a rejecting sink, waiting
/// and satisfied states both accept. Two accepting states, two
/// non-stuttering transitions.
inline dfadec::Dfa safety_ordering_dfa(const dfadec::Alphabet& alphabet,
                                       dfadec::Symbol before, dfadec::Symbol after) {
  const std::size_t sigma = alphabet.size();
  std::vector<dfadec::State> delta(3 * sigma);
  for (dfadec::Symbol a = 0; a < sigma; ++a) {
    delta[0 * sigma + a] = a == before ? 1u : (a == after ? 2u : 0u);
    delta[1 * sigma + a] = 1;
    delta[2 * sigma + a] = 2;
  }
  return dfadec::Dfa(alphabet, 3, 0, {0, 1}, std::move(delta));
}

/// The two-ordering decomposition over {y,r,b,n}: y before r, b before n.
inline dfadec::Decomposition two_orderings() {
  auto alphabet = yrbn();
  std::vector<dfadec::Dfa> members;
  members.push_back(ordering_dfa(alphabet, 0, 1));
  members.push_back(ordering_dfa(alphabet, 2, 3));
  return dfadec::Decomposition(std::move(members));
}

}  // namespace fixtures
