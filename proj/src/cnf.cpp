#include "dfadec/cnf.hpp"

#include <cstdlib>

#include "dfadec/errors.hpp"

namespace dfadec {

const char* to_string(ClauseGroup g) {
  switch (g) {
    case ClauseGroup::AcceptAll: return "accept_all";
    case ClauseGroup::RejectChoice: return "reject_choice";
    case ClauseGroup::RejectImpl: return "reject_impl";
    case ClauseGroup::ColorAtLeastOne: return "color_at_least_one";
    case ClauseGroup::ParentTransition: return "parent_transition";
    case ClauseGroup::TransAtMostOne: return "trans_at_most_one";
    case ClauseGroup::ColorAtMostOne: return "color_at_most_one";
    case ClauseGroup::TransAtLeastOne: return "trans_at_least_one";
    case ClauseGroup::ChildColor: return "child_color";
    case ClauseGroup::NoMerge: return "no_merge";
    case ClauseGroup::RootColor: return "root_color";
    case ClauseGroup::SymParentExists: return "sym_parent_exists";
    case ClauseGroup::SymParentDef: return "sym_parent_def";
    case ClauseGroup::SymEdgeDef: return "sym_edge_def";
    case ClauseGroup::SymDfsOrder: return "sym_dfs_order";
    case ClauseGroup::SymMinSymDef: return "sym_min_sym_def";
    case ClauseGroup::SymChildOrder: return "sym_child_order";
  }
  return "unknown";
}

void CnfInstance::add_clause(std::span<const Lit> lits, ClauseGroup g) {
  if (lits.empty()) throw InputError("empty clause");
  for (Lit l : lits) {
    int v = std::abs(l);
    if (v == 0 || v > num_vars_)
      throw InputError("clause literal references an unallocated variable");
  }
  offsets_.push_back(static_cast<std::uint32_t>(literals_.size()));
  lengths_.push_back(static_cast<std::uint32_t>(lits.size()));
  literals_.insert(literals_.end(), lits.begin(), lits.end());
  groups_.push_back(g);
  ++group_counts_[static_cast<std::size_t>(g)];
}

std::span<const Lit> CnfInstance::clause(std::size_t idx) const {
  return {literals_.data() + offsets_[idx], lengths_[idx]};
}

}  // namespace dfadec
