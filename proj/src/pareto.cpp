#include "dfadec/pareto.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <optional>
#include <set>
#include <thread>

#include "dfadec/encode.hpp"
#include "dfadec/errors.hpp"

namespace dfadec {

bool dominates(const SizeTuple& a, const SizeTuple& b) {
  if (a.size() != b.size()) throw InputError("size tuples have different lengths");
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

bool is_ordered(const SizeTuple& t) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] > t[i]) return false;
  return !t.empty();
}

std::vector<SizeTuple> successors(const SizeTuple& t) {
  std::vector<SizeTuple> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    SizeTuple s = t;
    ++s[i];
    if (is_ordered(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_tuple(const SizeTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

namespace {

struct TupleOutcome {
  SolveStatus status = SolveStatus::Unsat;
  std::optional<Decomposition> witness;
  double wall_ms = 0;
};

}  // namespace

SearchResult search_frontier(const LabeledSample& sample, std::uint32_t n,
                             const SearchOptions& options, const SatBackend& backend) {
  if (n == 0) throw InputError("the number of members must be at least 1");

  using clock = std::chrono::steady_clock;
  const bool limited = options.global_budget.count() > 0;
  const auto deadline = clock::now() + options.global_budget;

  const Apta apta = build_apta(sample);
  const State cap =
      options.size_cap > 0 ? options.size_cap : static_cast<State>(apta.num_nodes()) + 1;

  const State start_size = options.start == StartTuple::Twos ? 2 : 1;
  if (start_size > cap)
    throw SearchError("size cap " + std::to_string(cap) + " below the start tuple");

  SearchResult result;
  std::set<SizeTuple> visited;
  std::vector<SizeTuple> layer{SizeTuple(n, start_size)};
  visited.insert(layer.front());

  auto budget_for_solve = [&](clock::time_point now) {
    auto budget = options.solve_budget;
    if (limited) {
      auto remaining = std::chrono::duration_cast<std::chrono::microseconds>(deadline - now);
      if (remaining <= std::chrono::microseconds::zero())
        remaining = std::chrono::microseconds{1};
      if (budget.count() <= 0 || remaining < budget) budget = remaining;
    }
    return budget;
  };

  auto solve_tuple = [&](const SizeTuple& t, std::chrono::microseconds budget) {
    Encoding enc = encode(apta, t, EncodeOptions{.symmetry_breaking = options.symmetry});
    SolveResult r = backend.solve(enc.cnf, budget);
    TupleOutcome outcome;
    outcome.status = r.status;
    outcome.wall_ms = r.stats.wall_ms;
    if (r.status == SolveStatus::Sat) {
      outcome.witness = decode(r.model, enc.vars, apta.alphabet());
      assert(is_consistent(*outcome.witness, sample));
    }
    return outcome;
  };

  auto dominated_by_frontier = [&](const SizeTuple& t) {
    return std::any_of(result.frontier.begin(), result.frontier.end(),
                       [&](const FrontierEntry& e) { return dominates(e.sizes, t); });
  };

  while (!layer.empty()) {
    // Tuples in a layer share a coordinate sum, so no layer member can
    // dominate another: domination filtering against the frontier built
    // from earlier layers is exact, and the layer can be solved in any
    // order (or in parallel) without changing the outcome.
    std::vector<SizeTuple> candidates;
    for (const SizeTuple& t : layer)
      if (!dominated_by_frontier(t)) candidates.push_back(t);

    std::vector<TupleOutcome> outcomes(candidates.size());
    if (options.parallelism > 1 && candidates.size() > 1) {
      if (limited && clock::now() >= deadline) {
        result.complete = false;
        result.stop_reason = "global time budget exhausted";
        return result;
      }
      const auto layer_budget = budget_for_solve(clock::now());
      std::atomic<std::size_t> next_index{0};
      std::vector<std::exception_ptr> errors(candidates.size());
      auto worker = [&] {
        for (;;) {
          std::size_t i = next_index.fetch_add(1);
          if (i >= candidates.size()) return;
          try {
            outcomes[i] = solve_tuple(candidates[i], layer_budget);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      };
      std::vector<std::thread> pool;
      const auto threads =
          std::min<std::size_t>(options.parallelism, candidates.size());
      pool.reserve(threads);
      for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    } else {
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (limited && clock::now() >= deadline) {
          result.complete = false;
          result.stop_reason = "global time budget exhausted";
          return result;
        }
        outcomes[i] = solve_tuple(candidates[i], budget_for_solve(clock::now()));
      }
    }

    std::vector<SizeTuple> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const SizeTuple& t = candidates[i];
      ++result.stats.tuples_solved;
      result.stats.solve_ms.push_back(outcomes[i].wall_ms);
      switch (outcomes[i].status) {
        case SolveStatus::Timeout:
          result.complete = false;
          result.stop_reason = "solver timeout at size tuple " + format_tuple(t);
          return result;
        case SolveStatus::Sat:
          ++result.stats.sat_tuples;
          result.frontier.push_back({t, std::move(*outcomes[i].witness)});
          break;  // SAT tuples are sinks
        case SolveStatus::Unsat:
          for (SizeTuple& s : successors(t)) {
            if (*std::max_element(s.begin(), s.end()) > cap)
              throw SearchError("size cap " + std::to_string(cap) +
                                " exceeded at tuple " + format_tuple(s) +
                                "; the search did not converge");
            if (visited.insert(s).second) next.push_back(std::move(s));
          }
          break;
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }

  std::sort(result.frontier.begin(), result.frontier.end(),
            [](const FrontierEntry& a, const FrontierEntry& b) { return a.sizes < b.sizes; });
  return result;
}

}  // namespace dfadec
