#include "dfadec/sample.hpp"

#include <algorithm>

#include "dfadec/errors.hpp"

namespace dfadec {

namespace {

void normalize(std::vector<Word>& words, const Alphabet& alphabet) {
  for (const Word& w : words)
    for (Symbol a : w)
      if (a >= alphabet.size())
        throw InputError("example word contains a symbol outside the alphabet");
  std::sort(words.begin(), words.end(), shortlex_less);
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

}  // namespace

LabeledSample::LabeledSample(Alphabet alphabet, std::vector<Word> positives,
                             std::vector<Word> negatives)
    : alphabet_(std::move(alphabet)),
      positives_(std::move(positives)),
      negatives_(std::move(negatives)) {
  normalize(positives_, alphabet_);
  normalize(negatives_, alphabet_);
  // Contradiction check: both lists are sorted.
  std::vector<Word> both;
  std::set_intersection(positives_.begin(), positives_.end(), negatives_.begin(),
                        negatives_.end(), std::back_inserter(both), shortlex_less);
  if (!both.empty())
    throw InputError("contradictory sample: '" + format_word(alphabet_, both.front()) +
                     "' is labeled both positive and negative");
}

Apta::Apta(const LabeledSample& sample) : alphabet_(sample.alphabet()) {
  const std::size_t sigma = alphabet_.size();

  // Root first; insertion in shortlex example order plus per-node children
  // kept in symbol order makes node ids breadth-first and canonical.
  parent_.push_back(kNone);
  in_symbol_.push_back(0);
  children_.assign(sigma, kNone);
  labels_.push_back(NodeLabel::Unlabeled);

  auto insert_path = [&](const Word& w) {
    NodeId v = 0;
    for (Symbol a : w) {
      NodeId c = children_[v * sigma + a];
      if (c == kNone) {
        c = static_cast<NodeId>(parent_.size());
        children_[v * sigma + a] = c;
        parent_.push_back(v);
        in_symbol_.push_back(a);
        children_.insert(children_.end(), sigma, kNone);
        labels_.push_back(NodeLabel::Unlabeled);
      }
      v = c;
    }
    return v;
  };

  // Insert all prefixes grouped by length so ids follow BFS order.
  std::vector<Word> all;
  all.reserve(sample.positives().size() + sample.negatives().size());
  all.insert(all.end(), sample.positives().begin(), sample.positives().end());
  all.insert(all.end(), sample.negatives().begin(), sample.negatives().end());
  std::vector<Word> prefixes;
  for (const Word& w : all)
    for (std::size_t len = 0; len <= w.size(); ++len)
      prefixes.emplace_back(w.begin(), w.begin() + len);
  std::sort(prefixes.begin(), prefixes.end(), shortlex_less);
  prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());
  for (const Word& p : prefixes) insert_path(p);

  for (const Word& w : sample.positives()) labels_[insert_path(w)] = NodeLabel::Accepting;
  for (const Word& w : sample.negatives()) labels_[insert_path(w)] = NodeLabel::Rejecting;

  for (NodeId v = 0; v < static_cast<NodeId>(labels_.size()); ++v) {
    if (labels_[v] == NodeLabel::Accepting) accepting_.push_back(v);
    if (labels_[v] == NodeLabel::Rejecting) rejecting_.push_back(v);
  }
}

Apta::NodeId Apta::walk(const Word& word) const {
  NodeId v = 0;
  for (Symbol a : word) {
    if (a >= alphabet_.size())
      throw InputError("word contains a symbol outside the alphabet");
    v = child(v, a);
    if (v == kNone) return kNone;
  }
  return v;
}

Apta build_apta(const LabeledSample& sample) { return Apta(sample); }

}  // namespace dfadec
