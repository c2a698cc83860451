#pragma once

#include "dfadec/dfa.hpp"

namespace dfadec {

/// Description length of a concept, in nats.
struct DescriptionLength {
  double nats = 0.0;
  double bits() const;
};

/// 3 + 2 ln m + 2 ln |S| + (|F|+1) ln m + z (ln |S| + 2 ln m), where |S|
/// is the alphabet size, F the accepting set and z the number of
/// non-stuttering transitions. Invariant under state renumbering.
DescriptionLength dfa_dl(const Dfa& dfa);

/// Sum of member lengths minus the shared-header savings
/// (n-1)(2 ln |S| + 1) + 2 (n-1) ln m1; equals dfa_dl for n = 1.
DescriptionLength decomposition_dl(const Decomposition& decomp);

}  // namespace dfadec
