#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dfadec {

/// Signed DIMACS-style literal: +v / -v for variable v >= 1.
using Lit = std::int32_t;

/// Which rule family produced a clause. Used for debugging output and
/// clause-count regression checks.
enum class ClauseGroup : std::uint8_t {
  AcceptAll,        // positive node colors imply accepting states
  RejectChoice,     // some member rejects each negative node
  RejectImpl,       // chosen member's color of the negative node is rejecting
  ColorAtLeastOne,  // every node gets a color in every member
  ParentTransition, // parent+child colors force a transition
  TransAtMostOne,   // deterministic transition targets
  ColorAtMostOne,   // at most one color per node per member
  TransAtLeastOne,  // total transition function
  ChildColor,       // parent color + transition force the child color
  NoMerge,          // rejecting-colored vs accepting nodes cannot share a color
  RootColor,        // root color pinned to the first color
  SymParentExists,
  SymParentDef,
  SymEdgeDef,
  SymDfsOrder,
  SymMinSymDef,
  SymChildOrder,
};

const char* to_string(ClauseGroup g);
constexpr std::size_t kNumClauseGroups = 17;

/// Clause database; clauses are flat-stored and tagged with their group.
class CnfInstance {
public:
  CnfInstance() = default;
  explicit CnfInstance(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const { return num_vars_; }
  void set_num_vars(int n) { num_vars_ = n; }

  /// Rejects empty clauses and literals outside [1, num_vars].
  void add_clause(std::span<const Lit> lits, ClauseGroup g);
  void add_clause(std::initializer_list<Lit> lits, ClauseGroup g) {
    add_clause(std::span<const Lit>(lits.begin(), lits.size()), g);
  }

  std::size_t num_clauses() const { return offsets_.size(); }
  std::span<const Lit> clause(std::size_t idx) const;
  ClauseGroup group(std::size_t idx) const { return groups_[idx]; }

  std::size_t count(ClauseGroup g) const { return group_counts_[static_cast<std::size_t>(g)]; }

private:
  int num_vars_ = 0;
  std::vector<Lit> literals_;               // all clauses, concatenated
  std::vector<std::uint32_t> offsets_;      // start index per clause
  std::vector<std::uint32_t> lengths_;
  std::vector<ClauseGroup> groups_;
  std::size_t group_counts_[kNumClauseGroups] = {};
};

}  // namespace dfadec
