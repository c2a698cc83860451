#pragma once

#include <cstdint>
#include <vector>

#include "dfadec/alphabet.hpp"

namespace dfadec {

using State = std::uint32_t;

/// Ordered, non-decreasing tuple of per-DFA state counts.
using SizeTuple = std::vector<State>;

class LabeledSample;

/// Complete DFA: the transition function is total over (state, symbol).
/// Immutable after construction.
class Dfa {
public:
  /// `transitions` is row-major: transitions[s * |alphabet| + a] is the
  /// successor of state s on symbol a. Every entry must be < num_states.
  Dfa(Alphabet alphabet, State num_states, State initial,
      std::vector<State> accepting, std::vector<State> transitions);

  /// One accepting state with self-loops on every symbol.
  static Dfa universal(Alphabet alphabet);

  const Alphabet& alphabet() const { return alphabet_; }
  State num_states() const { return num_states_; }
  State initial() const { return initial_; }

  State next(State s, Symbol a) const { return transitions_[s * alphabet_.size() + a]; }
  bool is_accepting(State s) const { return accepting_mask_[s]; }

  /// Sorted list of accepting states.
  const std::vector<State>& accepting_states() const { return accepting_; }

  /// State reached from the initial state; throws InputError on
  /// out-of-alphabet symbols.
  State run(const Word& word) const;
  bool accepts(const Word& word) const;

  /// Number of (state, symbol) pairs with next(s, a) != s.
  std::size_t non_stuttering_count() const;

  bool operator==(const Dfa&) const = default;

private:
  Alphabet alphabet_;
  State num_states_ = 0;
  State initial_ = 0;
  std::vector<State> accepting_;       // sorted, unique
  std::vector<bool> accepting_mask_;
  std::vector<State> transitions_;     // row-major [state][symbol]
};

/// Non-empty tuple of DFAs over one shared alphabet, state counts
/// non-decreasing. Accepts a word iff every member accepts it.
class Decomposition {
public:
  explicit Decomposition(std::vector<Dfa> members);

  const std::vector<Dfa>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Alphabet& alphabet() const { return members_.front().alphabet(); }

  SizeTuple sizes() const;
  bool accepts(const Word& word) const;

  bool operator==(const Decomposition&) const = default;

private:
  std::vector<Dfa> members_;
};

/// Reachable part of the synchronous product; accepts the intersection
/// language. States are numbered in breadth-first discovery order.
Dfa product(const Decomposition& decomp);

/// Minimal complete DFA for the same language, states renumbered in
/// breadth-first reachability order with symbols in alphabet order.
Dfa minimize(const Dfa& dfa);

/// True iff every positive word is accepted by all members and every
/// negative word is rejected by at least one member.
bool is_consistent(const Decomposition& decomp, const LabeledSample& sample);

}  // namespace dfadec
