#include "dfadec/dfa.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "dfadec/errors.hpp"
#include "dfadec/sample.hpp"

namespace dfadec {

Dfa::Dfa(Alphabet alphabet, State num_states, State initial,
         std::vector<State> accepting, std::vector<State> transitions)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(initial),
      accepting_(std::move(accepting)),
      transitions_(std::move(transitions)) {
  if (num_states_ == 0) throw InputError("a DFA needs at least one state");
  if (initial_ >= num_states_) throw InputError("initial state out of range");
  if (transitions_.size() != static_cast<std::size_t>(num_states_) * alphabet_.size())
    throw InputError("transition table must cover every (state, symbol) pair");
  for (State t : transitions_)
    if (t >= num_states_) throw InputError("transition target out of range");

  std::sort(accepting_.begin(), accepting_.end());
  accepting_.erase(std::unique(accepting_.begin(), accepting_.end()), accepting_.end());
  accepting_mask_.assign(num_states_, false);
  for (State s : accepting_) {
    if (s >= num_states_) throw InputError("accepting state out of range");
    accepting_mask_[s] = true;
  }
}

Dfa Dfa::universal(Alphabet alphabet) {
  std::vector<State> loops(alphabet.size(), 0);
  return Dfa(std::move(alphabet), 1, 0, {0}, std::move(loops));
}

State Dfa::run(const Word& word) const {
  State s = initial_;
  for (Symbol a : word) {
    if (a >= alphabet_.size())
      throw InputError("word contains a symbol outside the alphabet");
    s = next(s, a);
  }
  return s;
}

bool Dfa::accepts(const Word& word) const { return accepting_mask_[run(word)]; }

std::size_t Dfa::non_stuttering_count() const {
  std::size_t z = 0;
  for (State s = 0; s < num_states_; ++s)
    for (Symbol a = 0; a < alphabet_.size(); ++a)
      if (next(s, a) != s) ++z;
  return z;
}

Decomposition::Decomposition(std::vector<Dfa> members) : members_(std::move(members)) {
  if (members_.empty()) throw InputError("a decomposition needs at least one member");
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (!(members_[i].alphabet() == members_[0].alphabet()))
      throw InputError("decomposition members must share one alphabet");
    if (members_[i - 1].num_states() > members_[i].num_states())
      throw InputError("decomposition member sizes must be non-decreasing");
  }
}

SizeTuple Decomposition::sizes() const {
  SizeTuple t;
  t.reserve(members_.size());
  for (const Dfa& d : members_) t.push_back(d.num_states());
  return t;
}

bool Decomposition::accepts(const Word& word) const {
  for (const Dfa& d : members_)
    if (!d.accepts(word)) return false;
  return true;
}

Dfa product(const Decomposition& decomp) {
  const auto& members = decomp.members();
  const std::size_t sigma = decomp.alphabet().size();

  std::vector<State> start;
  start.reserve(members.size());
  for (const Dfa& d : members) start.push_back(d.initial());

  // BFS over reachable state tuples; discovery order is the numbering.
  std::map<std::vector<State>, State> ids;
  std::vector<std::vector<State>> tuples;
  ids.emplace(start, 0);
  tuples.push_back(start);

  std::vector<State> transitions;
  std::vector<State> accepting;
  for (State q = 0; q < tuples.size(); ++q) {
    const auto tuple = tuples[q];
    bool all_accept = true;
    for (std::size_t k = 0; k < members.size(); ++k)
      all_accept = all_accept && members[k].is_accepting(tuple[k]);
    if (all_accept) accepting.push_back(q);

    for (Symbol a = 0; a < sigma; ++a) {
      std::vector<State> nxt(members.size());
      for (std::size_t k = 0; k < members.size(); ++k)
        nxt[k] = members[k].next(tuple[k], a);
      auto [it, inserted] = ids.emplace(nxt, static_cast<State>(tuples.size()));
      if (inserted) tuples.push_back(nxt);
      transitions.push_back(it->second);
    }
  }
  return Dfa(decomp.alphabet(), static_cast<State>(tuples.size()), 0,
             std::move(accepting), std::move(transitions));
}

namespace {

// Reachable states in BFS order (symbols in alphabet order).
std::vector<State> reachable_order(const Dfa& dfa) {
  std::vector<bool> seen(dfa.num_states(), false);
  std::vector<State> order;
  order.push_back(dfa.initial());
  seen[dfa.initial()] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Symbol a = 0; a < dfa.alphabet().size(); ++a) {
      State t = dfa.next(order[i], a);
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  return order;
}

}  // namespace

Dfa minimize(const Dfa& dfa) {
  const std::size_t sigma = dfa.alphabet().size();
  const auto order = reachable_order(dfa);

  // Dense ids for the reachable part.
  std::vector<State> dense(dfa.num_states(), 0);
  for (State i = 0; i < order.size(); ++i) dense[order[i]] = i;
  const State n = static_cast<State>(order.size());

  // Moore partition refinement from the accepting/rejecting split.
  std::vector<State> block(n);
  for (State i = 0; i < n; ++i) block[i] = dfa.is_accepting(order[i]) ? 1 : 0;

  State num_blocks = 2;
  for (;;) {
    // Signature: own block plus successor blocks per symbol.
    std::map<std::vector<State>, State> sig_ids;
    std::vector<State> next_block(n);
    for (State i = 0; i < n; ++i) {
      std::vector<State> sig;
      sig.reserve(sigma + 1);
      sig.push_back(block[i]);
      for (Symbol a = 0; a < sigma; ++a)
        sig.push_back(block[dense[dfa.next(order[i], a)]]);
      auto [it, _] = sig_ids.emplace(std::move(sig), static_cast<State>(sig_ids.size()));
      next_block[i] = it->second;
    }
    State refined = static_cast<State>(sig_ids.size());
    block = std::move(next_block);
    if (refined == num_blocks) break;
    num_blocks = refined;
  }

  // Quotient automaton, then canonical BFS renumbering.
  std::vector<State> rep(num_blocks, n);  // first reachable state per block
  for (State i = 0; i < n; ++i)
    if (rep[block[i]] == n) rep[block[i]] = i;

  std::vector<State> canon(num_blocks, num_blocks);
  std::vector<State> bfs;
  canon[block[dense[dfa.initial()]]] = 0;
  bfs.push_back(block[dense[dfa.initial()]]);
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (Symbol a = 0; a < sigma; ++a) {
      State tb = block[dense[dfa.next(order[rep[bfs[i]]], a)]];
      if (canon[tb] == num_blocks) {
        canon[tb] = static_cast<State>(bfs.size());
        bfs.push_back(tb);
      }
    }

  std::vector<State> transitions(static_cast<std::size_t>(num_blocks) * sigma);
  std::vector<State> accepting;
  for (State b : bfs) {
    State from = canon[b];
    State src = order[rep[b]];
    if (dfa.is_accepting(src)) accepting.push_back(from);
    for (Symbol a = 0; a < sigma; ++a)
      transitions[from * sigma + a] = canon[block[dense[dfa.next(src, a)]]];
  }
  return Dfa(dfa.alphabet(), num_blocks, 0, std::move(accepting), std::move(transitions));
}

bool is_consistent(const Decomposition& decomp, const LabeledSample& sample) {
  if (!(decomp.alphabet() == sample.alphabet()))
    throw InputError("sample alphabet does not match the decomposition alphabet");
  for (const Word& w : sample.positives())
    if (!decomp.accepts(w)) return false;
  for (const Word& w : sample.negatives())
    if (decomp.accepts(w)) return false;
  return true;
}

}  // namespace dfadec
