#include "dfadec/sat/solver.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace dfadec::sat {

namespace {

constexpr double kActivityDecay = 0.95;
constexpr double kActivityRescale = 1e100;
constexpr double kClauseDecay = 0.999;
constexpr double kClauseRescale = 1e20;
constexpr std::uint64_t kRestartBase = 64;

// Luby restart sequence: 1 1 2 1 1 2 4 1 1 2 1 1 2 4 8 ...
std::uint64_t luby(std::uint64_t i) {
  std::uint64_t size = 1, seq = 0;
  while (size < i + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != i) {
    size = (size - 1) / 2;
    --seq;
    i %= size;
  }
  return 1ull << seq;
}

}  // namespace

Solver::Solver(std::size_t num_vars) : num_vars_(num_vars) {
  watches_.resize(2 * (num_vars_ + 1));
  assign_.assign(num_vars_ + 1, 0);
  polarity_.assign(num_vars_ + 1, false);
  reason_.assign(num_vars_ + 1, -1);
  level_.assign(num_vars_ + 1, 0);
  activity_.assign(num_vars_ + 1, 0.0);
  heap_pos_.assign(num_vars_ + 1, -1);
  seen_.assign(num_vars_ + 1, false);
  level_stamp_.assign(num_vars_ + 2, 0);
  heap_.reserve(num_vars_);
  for (std::uint32_t v = 1; v <= num_vars_; ++v) heap_insert(v);
}

// Number of distinct decision levels among the literals.
std::uint32_t Solver::compute_lbd(const std::vector<ILit>& lits) {
  ++stamp_counter_;
  std::uint32_t lbd = 0;
  for (ILit l : lits) {
    auto lvl = static_cast<std::size_t>(level_[var_of(l)]);
    if (level_stamp_[lvl] != stamp_counter_) {
      level_stamp_[lvl] = stamp_counter_;
      ++lbd;
    }
  }
  return lbd;
}

Solver::ILit Solver::from_dimacs(std::int32_t lit) {
  auto v = static_cast<std::uint32_t>(std::abs(lit));
  return 2 * v + (lit < 0 ? 1 : 0);
}

int Solver::value(ILit l) const {
  int a = assign_[var_of(l)];
  return (l & 1) ? -a : a;
}

void Solver::add_clause(std::span<const std::int32_t> lits) {
  if (!ok_) return;
  assert(trail_lim_.empty());

  std::vector<ILit> clause;
  clause.reserve(lits.size());
  for (std::int32_t l : lits) {
    assert(l != 0 && static_cast<std::size_t>(std::abs(l)) <= num_vars_);
    clause.push_back(from_dimacs(l));
  }
  std::sort(clause.begin(), clause.end());
  clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  for (std::size_t i = 0; i + 1 < clause.size(); ++i)
    if (clause[i] == neg(clause[i + 1])) return;  // tautology

  // Drop root-level false literals, detect satisfied clauses.
  std::vector<ILit> kept;
  for (ILit l : clause) {
    int v = value(l);
    if (v > 0) return;
    if (v == 0) kept.push_back(l);
  }
  if (kept.empty()) {
    ok_ = false;
    return;
  }
  if (kept.size() == 1) {
    if (!enqueue(kept[0], -1)) ok_ = false;
    if (ok_ && propagate() != -1) ok_ = false;
    return;
  }
  auto idx = static_cast<std::uint32_t>(clauses_.size());
  watches_[neg(kept[0])].push_back({idx, kept[1]});
  watches_[neg(kept[1])].push_back({idx, kept[0]});
  clauses_.push_back(std::move(kept));
  clause_activity_.push_back(0.0);
  clause_lbd_.push_back(0);
  num_problem_clauses_ = clauses_.size();
}

bool Solver::enqueue(ILit l, std::int32_t reason) {
  int v = value(l);
  if (v > 0) return true;
  if (v < 0) return false;
  std::uint32_t x = var_of(l);
  assign_[x] = (l & 1) ? -1 : 1;
  level_[x] = current_level();
  reason_[x] = reason;
  polarity_[x] = !(l & 1);
  trail_.push_back(l);
  return true;
}

std::int32_t Solver::propagate() {
  while (qhead_ < trail_.size()) {
    ILit p = trail_[qhead_++];
    ++stats_.propagations;
    auto& ws = watches_[p];  // clauses watching ~p via index on neg side
    std::size_t keep = 0;
    for (std::size_t wi = 0; wi < ws.size(); ++wi) {
      Watch w = ws[wi];
      if (value(w.blocker) > 0) {
        ws[keep++] = w;
        continue;
      }
      auto& c = clauses_[w.clause];
      ILit false_lit = neg(p);
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (value(c[0]) > 0) {
        ws[keep++] = {w.clause, c[0]};
        continue;
      }
      bool moved = false;
      for (std::size_t i = 2; i < c.size(); ++i)
        if (value(c[i]) >= 0) {
          std::swap(c[1], c[i]);
          watches_[neg(c[1])].push_back({w.clause, c[0]});
          moved = true;
          break;
        }
      if (moved) continue;
      // Unit or conflicting.
      ws[keep++] = w;
      if (value(c[0]) < 0) {
        for (std::size_t wj = wi + 1; wj < ws.size(); ++wj) ws[keep++] = ws[wj];
        ws.resize(keep);
        qhead_ = trail_.size();
        return static_cast<std::int32_t>(w.clause);
      }
      enqueue(c[0], static_cast<std::int32_t>(w.clause));
    }
    ws.resize(keep);
  }
  return -1;
}

void Solver::analyze(std::int32_t confl, std::vector<ILit>& learnt, int& bt_level) {
  learnt.clear();
  learnt.push_back(0);  // slot for the asserting literal

  int counter = 0;
  ILit p = 0;
  std::size_t index = trail_.size();

  for (;;) {
    bump_clause(static_cast<std::uint32_t>(confl));
    if (static_cast<std::size_t>(confl) >= num_problem_clauses_) {
      // Keep the sharpest LBD a learnt clause has exhibited.
      std::uint32_t fresh = compute_lbd(clauses_[static_cast<std::size_t>(confl)]);
      if (fresh < clause_lbd_[static_cast<std::size_t>(confl)])
        clause_lbd_[static_cast<std::size_t>(confl)] = fresh;
    }
    const auto& c = clauses_[static_cast<std::size_t>(confl)];
    for (std::size_t i = (p == 0 ? 0 : 1); i < c.size(); ++i) {
      ILit q = c[i];
      std::uint32_t v = var_of(q);
      if (!seen_[v] && level_[v] > 0) {
        seen_[v] = true;
        bump_var(v);
        if (level_[v] == current_level())
          ++counter;
        else
          learnt.push_back(q);
      }
    }
    while (!seen_[var_of(trail_[index - 1])]) --index;
    p = trail_[--index];
    seen_[var_of(p)] = false;
    --counter;
    if (counter == 0) break;
    confl = reason_[var_of(p)];
    assert(confl != -1);
  }
  learnt[0] = neg(p);

  // Minimize: drop literals whose reasons are entirely implied by the
  // rest of the clause (deep check through the implication graph).
  std::vector<std::uint32_t> to_clear;
  for (std::size_t i = 1; i < learnt.size(); ++i) to_clear.push_back(var_of(learnt[i]));
  std::size_t kept = 1;
  for (std::size_t i = 1; i < learnt.size(); ++i) {
    std::uint32_t v = var_of(learnt[i]);
    if (reason_[v] == -1 || !lit_redundant(learnt[i], to_clear)) learnt[kept++] = learnt[i];
  }
  learnt.resize(kept);

  bt_level = 0;
  if (learnt.size() > 1) {
    std::size_t max_i = 1;
    for (std::size_t i = 2; i < learnt.size(); ++i)
      if (level_[var_of(learnt[i])] > level_[var_of(learnt[max_i])]) max_i = i;
    std::swap(learnt[1], learnt[max_i]);
    bt_level = level_[var_of(learnt[1])];
  }
  seen_[var_of(learnt[0])] = false;
  for (std::uint32_t v : to_clear) seen_[v] = false;
}

// True when every path from p's reason bottoms out in clause literals or
// level-0 assignments, i.e. p adds nothing to the learnt clause.
bool Solver::lit_redundant(ILit p, std::vector<std::uint32_t>& to_clear) {
  std::vector<ILit> stack{p};
  const std::size_t top = to_clear.size();
  while (!stack.empty()) {
    ILit q = stack.back();
    stack.pop_back();
    assert(reason_[var_of(q)] != -1);
    const auto& c = clauses_[static_cast<std::size_t>(reason_[var_of(q)])];
    for (std::size_t i = 1; i < c.size(); ++i) {
      std::uint32_t v = var_of(c[i]);
      if (seen_[v] || level_[v] == 0) continue;
      if (reason_[v] == -1) {
        for (std::size_t j = top; j < to_clear.size(); ++j) seen_[to_clear[j]] = false;
        to_clear.resize(top);
        return false;
      }
      seen_[v] = true;
      to_clear.push_back(v);
      stack.push_back(c[i]);
    }
  }
  return true;
}

void Solver::backtrack(int level) {
  while (current_level() > level) {
    std::size_t bound = trail_lim_.back();
    while (trail_.size() > bound) {
      std::uint32_t v = var_of(trail_.back());
      assign_[v] = 0;
      reason_[v] = -1;
      if (heap_pos_[v] < 0) heap_insert(v);
      trail_.pop_back();
    }
    trail_lim_.pop_back();
  }
  qhead_ = trail_.size();
}

void Solver::bump_var(std::uint32_t v) {
  activity_[v] += var_inc_;
  if (activity_[v] > kActivityRescale) {
    for (std::uint32_t x = 1; x <= num_vars_; ++x) activity_[x] /= kActivityRescale;
    var_inc_ /= kActivityRescale;
  }
  if (heap_pos_[v] >= 0) heap_sift_up(static_cast<std::size_t>(heap_pos_[v]));
}

void Solver::bump_clause(std::uint32_t idx) {
  if (idx < num_problem_clauses_) return;
  clause_activity_[idx] += cla_inc_;
  if (clause_activity_[idx] > kClauseRescale) {
    for (std::size_t c = num_problem_clauses_; c < clause_activity_.size(); ++c)
      clause_activity_[c] /= kClauseRescale;
    cla_inc_ /= kClauseRescale;
  }
}

void Solver::decay_activities() {
  var_inc_ /= kActivityDecay;
  cla_inc_ /= kClauseDecay;
}

// Drops the worse half of the learnt clauses by (LBD, activity); locked,
// binary and glue clauses survive. Watch lists are rebuilt afterwards.
void Solver::reduce_learnts() {
  std::vector<std::uint32_t> candidates;
  for (std::size_t c = num_problem_clauses_; c < clauses_.size(); ++c) {
    const auto& cl = clauses_[c];
    if (cl.empty() || cl.size() <= 2 || clause_lbd_[c] <= 3) continue;
    bool locked = value(cl[0]) > 0 &&
                  reason_[var_of(cl[0])] == static_cast<std::int32_t>(c);
    if (!locked) candidates.push_back(static_cast<std::uint32_t>(c));
  }
  std::sort(candidates.begin(), candidates.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (clause_activity_[a] != clause_activity_[b])
      return clause_activity_[a] < clause_activity_[b];
    return a < b;
  });
  for (std::size_t i = 0; i < candidates.size() / 2; ++i) {
    clauses_[candidates[i]].clear();
    clauses_[candidates[i]].shrink_to_fit();
    --live_learnts_;
  }

  for (auto& w : watches_) w.clear();
  for (std::size_t c = 0; c < clauses_.size(); ++c) {
    const auto& cl = clauses_[c];
    if (cl.empty()) continue;
    watches_[neg(cl[0])].push_back({static_cast<std::uint32_t>(c), cl[1]});
    watches_[neg(cl[1])].push_back({static_cast<std::uint32_t>(c), cl[0]});
  }
}

bool Solver::heap_less(std::uint32_t a, std::uint32_t b) const {
  if (activity_[a] != activity_[b]) return activity_[a] > activity_[b];
  return a < b;  // deterministic tie-break
}

void Solver::heap_insert(std::uint32_t v) {
  heap_pos_[v] = static_cast<std::int32_t>(heap_.size());
  heap_.push_back(v);
  heap_sift_up(heap_.size() - 1);
}

void Solver::heap_sift_up(std::size_t idx) {
  std::uint32_t v = heap_[idx];
  while (idx > 0) {
    std::size_t parent = (idx - 1) / 2;
    if (!heap_less(v, heap_[parent])) break;
    heap_[idx] = heap_[parent];
    heap_pos_[heap_[idx]] = static_cast<std::int32_t>(idx);
    idx = parent;
  }
  heap_[idx] = v;
  heap_pos_[v] = static_cast<std::int32_t>(idx);
}

void Solver::heap_sift_down(std::size_t idx) {
  std::uint32_t v = heap_[idx];
  for (;;) {
    std::size_t child = 2 * idx + 1;
    if (child >= heap_.size()) break;
    if (child + 1 < heap_.size() && heap_less(heap_[child + 1], heap_[child])) ++child;
    if (!heap_less(heap_[child], v)) break;
    heap_[idx] = heap_[child];
    heap_pos_[heap_[idx]] = static_cast<std::int32_t>(idx);
    idx = child;
  }
  heap_[idx] = v;
  heap_pos_[v] = static_cast<std::int32_t>(idx);
}

std::uint32_t Solver::heap_pop() {
  std::uint32_t top = heap_[0];
  heap_pos_[top] = -1;
  heap_[0] = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_pos_[heap_[0]] = 0;
    heap_sift_down(0);
  }
  return top;
}

std::uint32_t Solver::pick_branch_var() {
  while (!heap_.empty()) {
    std::uint32_t v = heap_pop();
    if (assign_[v] == 0) return v;
  }
  return 0;
}

Outcome Solver::solve(std::chrono::microseconds budget) {
  using clock = std::chrono::steady_clock;
  const bool limited = budget.count() > 0;
  const auto deadline = clock::now() + budget;

  if (!ok_) return Outcome::Unsat;
  if (propagate() != -1) {
    ok_ = false;
    return Outcome::Unsat;
  }

  std::vector<ILit> learnt;
  std::uint64_t conflicts_since_restart = 0;
  std::uint64_t restart_limit = kRestartBase * luby(stats_.restarts);
  max_learnts_ = std::max<std::size_t>(4000, num_problem_clauses_ / 2);

  for (;;) {
    std::int32_t confl = propagate();
    if (confl != -1) {
      ++stats_.conflicts;
      ++conflicts_since_restart;
      if (current_level() == 0) return Outcome::Unsat;

      int bt_level = 0;
      analyze(confl, learnt, bt_level);
      const std::uint32_t lbd = compute_lbd(learnt);  // levels still valid here
      backtrack(bt_level);

      if (learnt.size() == 1) {
        enqueue(learnt[0], -1);
      } else {
        auto idx = static_cast<std::uint32_t>(clauses_.size());
        watches_[neg(learnt[0])].push_back({idx, learnt[1]});
        watches_[neg(learnt[1])].push_back({idx, learnt[0]});
        clauses_.push_back(learnt);
        clause_activity_.push_back(0.0);
        clause_lbd_.push_back(lbd);
        bump_clause(idx);
        ++live_learnts_;
        enqueue(learnt[0], static_cast<std::int32_t>(idx));
      }
      decay_activities();

      if (live_learnts_ > max_learnts_) {
        reduce_learnts();
        max_learnts_ = max_learnts_ + max_learnts_ / 4;
      }

      if (limited && (stats_.conflicts & 0xfu) == 0 && clock::now() >= deadline)
        return Outcome::Timeout;
    } else {
      if (conflicts_since_restart >= restart_limit) {
        ++stats_.restarts;
        conflicts_since_restart = 0;
        restart_limit = kRestartBase * luby(stats_.restarts);
        backtrack(0);
        continue;
      }
      if (limited && (stats_.decisions & 0x3fu) == 0 && clock::now() >= deadline)
        return Outcome::Timeout;

      std::uint32_t v = pick_branch_var();
      if (v == 0) {
        model_.assign(num_vars_ + 1, false);
        for (std::uint32_t x = 1; x <= num_vars_; ++x) model_[x] = assign_[x] > 0;
        return Outcome::Sat;
      }
      ++stats_.decisions;
      trail_lim_.push_back(trail_.size());
      enqueue(2 * v + (polarity_[v] ? 0 : 1), -1);
    }
  }
}

bool clause_satisfied(std::span<const std::int32_t> lits, const std::vector<bool>& model) {
  for (std::int32_t l : lits) {
    auto v = static_cast<std::size_t>(std::abs(l));
    if (v < model.size() && model[v] == (l > 0)) return true;
  }
  return false;
}

}  // namespace dfadec::sat
