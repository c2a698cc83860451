#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dfadec/dfa.hpp"
#include "dfadec/pareto.hpp"
#include "dfadec/sample.hpp"

namespace dfadec {

struct OrderingPair {
  Symbol before;
  Symbol after;
};

/// A conjunction of symbol-ordering tasks: for each pair, the word must
/// contain an occurrence of "before" followed later by "after".
class PartialOrderTask {
public:
  PartialOrderTask(Alphabet alphabet, std::vector<OrderingPair> orderings);

  /// Deterministic task with `num_pairs` orderings over `alphabet_size`
  /// single-letter symbols. Disjoint pairs (a,b), (c,d), ... are used
  /// while symbols last, then repeated in the same orientation.
  static PartialOrderTask make_default(std::uint32_t num_pairs,
                                       std::uint32_t alphabet_size);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<OrderingPair>& orderings() const { return orderings_; }

private:
  Alphabet alphabet_;
  std::vector<OrderingPair> orderings_;
};

/// One 3-state DFA per ordering pair: the initial state waits for
/// "before", the middle state waits for a later "after", and DONE accepts
/// and absorbs. Unrelated (and premature "after") symbols stutter, so the
/// product of the pair DFAs stays fully distinguishable.
Decomposition ground_truth(const PartialOrderTask& task);

/// count/2 distinct positive and count/2 distinct negative words, labeled
/// by the ground truth. Words are drawn uniformly by length then content,
/// up to max_len (0 means 2 * #pairs + 2). Deterministic per seed; throws
/// GenerationError when a class cannot be filled at this length bound.
LabeledSample generate_sample(const PartialOrderTask& task, std::size_t count,
                              std::uint64_t seed, std::size_t max_len = 0);

struct BenchConfig {
  std::string scenario;                  // CSV label, e.g. "q1"
  std::vector<std::uint32_t> alphabet_sizes;
  std::vector<std::uint32_t> num_dfas;   // ordering pairs per task
  std::vector<std::size_t> num_examples;
  std::vector<std::uint64_t> seeds;
  std::chrono::microseconds timeout{std::chrono::seconds{60}};
  bool monolithic_baseline = true;
  /// Searches are deterministic, so each one is timed as the best of this
  /// many identical runs; desk cells sit in the millisecond range where a
  /// single sample is scheduler noise.
  unsigned timing_repetitions = 1;
  /// Cells where the baseline is slower than the decomposition search by
  /// more than this factor are reported in the notes.
  double baseline_factor_guard = 4.0;
  /// Stop extending a sweep once every seed of a cell times out.
  bool stop_on_all_timeout = true;
};

struct BenchRow {
  std::string scenario;
  std::uint32_t n = 0;
  std::uint32_t sigma = 0;
  std::size_t num_examples = 0;
  std::string seed;  // seed value, or "mean" for the per-cell average row
  double frontier_tuples = 0;
  double wall_ms = 0;
  std::string status;  // "ok" or "timeout"
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<std::string> notes;
};

BenchReport run_bench(const BenchConfig& config, const SatBackend& backend);

/// Stable column order:
/// scenario,n,sigma,num_examples,seed,frontier_tuples,wall_ms,status
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Desk-scale sweeps; full_grid widens them to the full ranges.
BenchConfig desk_q1(bool full_grid = false);
BenchConfig desk_q2(bool full_grid = false);

}  // namespace dfadec
