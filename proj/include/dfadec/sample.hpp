#pragma once

#include <cstdint>
#include <vector>

#include "dfadec/alphabet.hpp"

namespace dfadec {

/// Positive/negative example words over one alphabet. Words are
/// deduplicated and kept in shortlex order; a word appearing with both
/// labels is rejected at construction.
class LabeledSample {
public:
  LabeledSample(Alphabet alphabet, std::vector<Word> positives,
                std::vector<Word> negatives);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Word>& positives() const { return positives_; }
  const std::vector<Word>& negatives() const { return negatives_; }

  bool operator==(const LabeledSample&) const = default;

private:
  Alphabet alphabet_;
  std::vector<Word> positives_;
  std::vector<Word> negatives_;
};

enum class NodeLabel : std::uint8_t { Unlabeled, Accepting, Rejecting };

/// Prefix tree over all example prefixes. Node 0 is the root (the empty
/// word); ids follow breadth-first order with children in symbol order,
/// so construction is deterministic and insensitive to example order.
class Apta {
public:
  using NodeId = std::int32_t;
  static constexpr NodeId kNone = -1;

  explicit Apta(const LabeledSample& sample);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_nodes() const { return parent_.size(); }
  NodeId root() const { return 0; }

  NodeId parent(NodeId v) const { return parent_[v]; }
  Symbol in_symbol(NodeId v) const { return in_symbol_[v]; }
  NodeId child(NodeId v, Symbol a) const { return children_[v * alphabet_.size() + a]; }
  NodeLabel label(NodeId v) const { return labels_[v]; }

  const std::vector<NodeId>& accepting_nodes() const { return accepting_; }
  const std::vector<NodeId>& rejecting_nodes() const { return rejecting_; }

  /// Node reached from the root, or kNone if the path leaves the tree.
  NodeId walk(const Word& word) const;

  bool operator==(const Apta&) const = default;

private:
  Alphabet alphabet_;
  std::vector<NodeId> parent_;     // kNone for the root
  std::vector<Symbol> in_symbol_;  // 0 for the root, unused
  std::vector<NodeId> children_;   // row-major [node][symbol], kNone if absent
  std::vector<NodeLabel> labels_;
  std::vector<NodeId> accepting_;  // sorted
  std::vector<NodeId> rejecting_;  // sorted
};

Apta build_apta(const LabeledSample& sample);

}  // namespace dfadec
