#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

namespace dfadec::sat {

enum class Outcome : std::uint8_t { Sat, Unsat, Timeout };

struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
  std::uint64_t restarts = 0;
};

/// Conflict-driven clause learning SAT solver: two-watched-literal
/// propagation, 1-UIP learning, activity-ordered decisions with phase
/// saving, Luby restarts. Fully deterministic: ties break on variable
/// index and no randomness is used anywhere.
class Solver {
public:
  explicit Solver(std::size_t num_vars);

  /// DIMACS-style signed literals. Duplicates are dropped, tautologies
  /// ignored; an empty (or immediately contradicted) clause makes the
  /// instance trivially unsatisfiable.
  void add_clause(std::span<const std::int32_t> lits);

  /// budget <= 0 means no limit. On Sat the model assigns every variable.
  Outcome solve(std::chrono::microseconds budget = std::chrono::microseconds{0});

  /// model()[v] for v in [1, num_vars]; valid only after Outcome::Sat.
  const std::vector<bool>& model() const { return model_; }
  const SolverStats& stats() const { return stats_; }

private:
  using ILit = std::uint32_t;  // 2*var for positive, 2*var+1 for negated

  static ILit neg(ILit l) { return l ^ 1u; }
  static std::uint32_t var_of(ILit l) { return l >> 1; }
  static ILit from_dimacs(std::int32_t lit);

  struct Watch {
    std::uint32_t clause;
    ILit blocker;
  };

  int value(ILit l) const;  // 1 true, -1 false, 0 unassigned
  bool enqueue(ILit l, std::int32_t reason);
  std::int32_t propagate();  // conflicting clause index or -1
  void analyze(std::int32_t confl, std::vector<ILit>& learnt, int& bt_level);
  bool lit_redundant(ILit p, std::vector<std::uint32_t>& to_clear);
  std::uint32_t compute_lbd(const std::vector<ILit>& lits);
  void backtrack(int level);
  void bump_var(std::uint32_t v);
  void bump_clause(std::uint32_t idx);
  void decay_activities();
  void reduce_learnts();
  std::uint32_t pick_branch_var();  // 0 if all assigned

  void heap_insert(std::uint32_t v);
  std::uint32_t heap_pop();
  void heap_sift_up(std::size_t idx);
  void heap_sift_down(std::size_t idx);
  bool heap_less(std::uint32_t a, std::uint32_t b) const;

  int current_level() const { return static_cast<int>(trail_lim_.size()); }

  std::size_t num_vars_;
  bool ok_ = true;

  std::vector<std::vector<ILit>> clauses_;  // deleted learnts become empty
  std::vector<std::vector<Watch>> watches_;  // indexed by internal literal
  std::size_t num_problem_clauses_ = 0;      // indices below this are never deleted
  std::size_t live_learnts_ = 0;
  std::size_t max_learnts_ = 0;
  std::vector<double> clause_activity_;      // learnts only, parallel to clauses_
  std::vector<std::uint32_t> clause_lbd_;    // decision-level count per learnt
  double cla_inc_ = 1.0;
  std::vector<std::uint64_t> level_stamp_;   // scratch for LBD computation
  std::uint64_t stamp_counter_ = 0;

  std::vector<std::int8_t> assign_;     // per var: 0 unassigned, +1 true, -1 false
  std::vector<bool> polarity_;          // saved phase per var
  std::vector<std::int32_t> reason_;    // clause index or -1, per var
  std::vector<int> level_;              // per var
  std::vector<ILit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;

  std::vector<double> activity_;
  double var_inc_ = 1.0;
  std::vector<std::uint32_t> heap_;
  std::vector<std::int32_t> heap_pos_;  // -1 if not in heap

  std::vector<bool> seen_;  // scratch for analyze()

  std::vector<bool> model_;
  SolverStats stats_;
};

/// Independent check that an assignment satisfies every clause added so
/// far; used by tests and the process backend to validate models.
bool clause_satisfied(std::span<const std::int32_t> lits, const std::vector<bool>& model);

}  // namespace dfadec::sat
