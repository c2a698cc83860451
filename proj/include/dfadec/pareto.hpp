#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "dfadec/dfa.hpp"
#include "dfadec/sample.hpp"
#include "dfadec/satgate.hpp"

namespace dfadec {

/// Strict product-order dominance: a <= b coordinate-wise with at least
/// one strict inequality. Throws InputError on length mismatch.
bool dominates(const SizeTuple& a, const SizeTuple& b);

bool is_ordered(const SizeTuple& t);

/// All tuples reachable by incrementing exactly one coordinate, filtered
/// to those still non-decreasing, in lexicographic order.
std::vector<SizeTuple> successors(const SizeTuple& t);

enum class StartTuple : std::uint8_t { Ones, Twos };

struct SearchOptions {
  bool symmetry = true;
  StartTuple start = StartTuple::Ones;
  std::chrono::microseconds solve_budget{0};   // per size tuple; <= 0 unlimited
  std::chrono::microseconds global_budget{0};  // whole search; <= 0 unlimited
  State size_cap = 0;                          // 0 means |APTA| + 1
  unsigned parallelism = 1;                    // intra-layer solver threads
};

struct FrontierEntry {
  SizeTuple sizes;
  Decomposition witness;
};

struct SearchStats {
  std::uint64_t tuples_solved = 0;
  std::uint64_t sat_tuples = 0;
  std::vector<double> solve_ms;  // one entry per solved tuple
};

struct SearchResult {
  std::vector<FrontierEntry> frontier;  // lexicographically sorted by sizes
  bool complete = true;
  std::string stop_reason;  // set when !complete
  SearchStats stats;
};

/// Breadth-first search over size tuples, layered by coordinate sum with
/// lexicographic order inside a layer. SAT tuples become frontier entries
/// and sinks; UNSAT tuples expand; tuples dominated by the frontier are
/// skipped. A tuple timeout or an exhausted global budget yields a
/// partial result with complete == false. Exceeding the size cap throws
/// SearchError.
SearchResult search_frontier(const LabeledSample& sample, std::uint32_t n,
                             const SearchOptions& options,
                             const SatBackend& backend);

std::string format_tuple(const SizeTuple& t);

}  // namespace dfadec
