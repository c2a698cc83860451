#include "dfadec/taskgen.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <random>
#include <set>

#include "dfadec/errors.hpp"

namespace dfadec {

PartialOrderTask::PartialOrderTask(Alphabet alphabet, std::vector<OrderingPair> orderings)
    : alphabet_(std::move(alphabet)), orderings_(std::move(orderings)) {
  if (orderings_.empty()) throw InputError("a task needs at least one ordering pair");
  for (const OrderingPair& p : orderings_) {
    if (p.before >= alphabet_.size() || p.after >= alphabet_.size())
      throw InputError("ordering pair uses a symbol outside the alphabet");
    if (p.before == p.after)
      throw InputError("ordering pair must use two distinct symbols");
  }
}

PartialOrderTask PartialOrderTask::make_default(std::uint32_t num_pairs,
                                                std::uint32_t alphabet_size) {
  if (alphabet_size < 2) throw InputError("need at least two symbols for an ordering");
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < alphabet_size; ++i)
    labels.push_back(std::string(1, static_cast<char>('a' + i % 26)) +
                     (i >= 26 ? std::to_string(i / 26) : ""));
  Alphabet alphabet(std::move(labels));

  const std::uint32_t disjoint = alphabet_size / 2;
  std::vector<OrderingPair> pairs;
  for (std::uint32_t i = 0; i < num_pairs; ++i) {
    std::uint32_t base = (i % disjoint) * 2;
    pairs.push_back({base, base + 1});
  }
  return PartialOrderTask(std::move(alphabet), std::move(pairs));
}

Decomposition ground_truth(const PartialOrderTask& task) {
  const std::size_t sigma = task.alphabet().size();
  std::vector<Dfa> members;
  members.reserve(task.orderings().size());
  for (const OrderingPair& pair : task.orderings()) {
    // 0 = waiting for "before", 1 = waiting for a later "after",
    // 2 = done (accepting, absorbing). Early "after" symbols are ignored,
    // so the pair product of two of these has no dead states.
    std::vector<State> transitions(3 * sigma);
    for (Symbol a = 0; a < sigma; ++a) {
      transitions[0 * sigma + a] = a == pair.before ? 1 : 0;
      transitions[1 * sigma + a] = a == pair.after ? 2 : 1;
      transitions[2 * sigma + a] = 2;
    }
    members.emplace_back(task.alphabet(), 3, 0, std::vector<State>{2},
                         std::move(transitions));
  }
  return Decomposition(std::move(members));
}

namespace {

// Exact count of positive/negative words up to max_len, by dynamic
// programming over reachable product-state tuples. Used only to produce a
// precise diagnostic when rejection sampling cannot fill a class.
std::pair<std::uint64_t, std::uint64_t> count_words_by_class(const Decomposition& gt,
                                                             std::size_t max_len,
                                                             std::uint64_t limit) {
  const std::size_t sigma = gt.alphabet().size();
  std::vector<State> start;
  for (const Dfa& d : gt.members()) start.push_back(d.initial());

  std::map<std::vector<State>, std::uint64_t> current{{start, 1}};
  std::uint64_t positives = 0, negatives = 0;
  auto tally = [&] {
    for (const auto& [tuple, count] : current) {
      bool all = true;
      for (std::size_t k = 0; k < tuple.size(); ++k)
        all = all && gt.members()[k].is_accepting(tuple[k]);
      (all ? positives : negatives) += count;
    }
    positives = std::min(positives, limit);
    negatives = std::min(negatives, limit);
  };
  tally();
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (positives >= limit && negatives >= limit) break;
    std::map<std::vector<State>, std::uint64_t> next;
    for (const auto& [tuple, count] : current)
      for (Symbol a = 0; a < sigma; ++a) {
        std::vector<State> succ(tuple.size());
        for (std::size_t k = 0; k < tuple.size(); ++k)
          succ[k] = gt.members()[k].next(tuple[k], a);
        next[succ] += count;
      }
    current = std::move(next);
    tally();
  }
  return {positives, negatives};
}

}  // namespace

LabeledSample generate_sample(const PartialOrderTask& task, std::size_t count,
                              std::uint64_t seed, std::size_t max_len) {
  if (count < 2 || count % 2 != 0)
    throw InputError("example count must be even and at least 2");
  if (max_len == 0) max_len = 2 * task.orderings().size() + 2;

  const Decomposition gt = ground_truth(task);
  const std::size_t sigma = task.alphabet().size();
  const std::size_t per_class = count / 2;

  std::mt19937_64 rng(seed);
  std::set<Word, ShortlexLess> positives, negatives;

  const std::uint64_t max_attempts = 4096ull * count + 200000ull;
  for (std::uint64_t attempt = 0;
       attempt < max_attempts &&
       (positives.size() < per_class || negatives.size() < per_class);
       ++attempt) {
    // Uniform length, then uniform content.
    std::size_t len = static_cast<std::size_t>(rng() % (max_len + 1));
    Word w(len);
    for (auto& a : w) a = static_cast<Symbol>(rng() % sigma);
    auto& bucket = gt.accepts(w) ? positives : negatives;
    if (bucket.size() < per_class) bucket.insert(std::move(w));
  }

  if (positives.size() < per_class || negatives.size() < per_class) {
    auto [pos, neg] = count_words_by_class(gt, max_len, per_class);
    const bool pos_short = pos < per_class;
    const std::string cls = pos_short ? "positive" : "negative";
    const std::uint64_t have = pos_short ? pos : neg;
    throw GenerationError("cannot draw " + std::to_string(per_class) + " distinct " + cls +
                          " examples: only " + std::to_string(have) +
                          " exist up to length " + std::to_string(max_len));
  }

  return LabeledSample(task.alphabet(),
                       std::vector<Word>(positives.begin(), positives.end()),
                       std::vector<Word>(negatives.begin(), negatives.end()));
}

namespace {

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

}  // namespace

BenchReport run_bench(const BenchConfig& config, const SatBackend& backend) {
  if (config.num_dfas.empty() || config.num_examples.empty() ||
      config.alphabet_sizes.empty() || config.seeds.empty())
    throw InputError("benchmark ranges must be non-empty");
  if (config.timeout.count() <= 0) throw InputError("benchmark timeout must be positive");

  BenchReport report;

  for (std::uint32_t sigma : config.alphabet_sizes) {
    bool sweep_dead = false;
    for (std::uint32_t n : config.num_dfas) {
      if (sweep_dead) break;
      for (std::size_t examples : config.num_examples) {
        if (sweep_dead) break;

        struct CellRun {
          double decomp_ms = 0, mono_ms = 0;
          double tuples = 0, mono_tuples = 0;
          bool decomp_ok = false, mono_ok = false;
        };
        std::vector<CellRun> runs;

        for (std::uint64_t seed : config.seeds) {
          PartialOrderTask task = PartialOrderTask::make_default(n, sigma);
          LabeledSample sample = generate_sample(task, examples, seed);

          SearchOptions opts;
          opts.global_budget = config.timeout;
          const unsigned reps = std::max(1u, config.timing_repetitions);

          // Deterministic searches: repeat the identical run and keep the
          // fastest wall time; the first run supplies the result.
          auto timed_search = [&](std::uint32_t members, bool& ok, double& tuples) {
            double best_ms = 0;
            for (unsigned r = 0; r < reps; ++r) {
              auto t0 = std::chrono::steady_clock::now();
              SearchResult res = search_frontier(sample, members, opts, backend);
              double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
              if (r == 0) {
                ok = res.complete;
                tuples = static_cast<double>(res.frontier.size());
                best_ms = ms;
              } else {
                best_ms = std::min(best_ms, ms);
              }
              if (!ok) break;  // a timed-out cell is not worth repeating
            }
            return best_ms;
          };

          CellRun run;
          run.decomp_ms = timed_search(n, run.decomp_ok, run.tuples);
          report.rows.push_back({config.scenario, n, sigma, examples,
                                 std::to_string(seed), run.tuples, run.decomp_ms,
                                 run.decomp_ok ? "ok" : "timeout"});

          if (config.monolithic_baseline) {
            run.mono_ms = timed_search(1, run.mono_ok, run.mono_tuples);
            report.rows.push_back({config.scenario + "-mono", n, sigma, examples,
                                   std::to_string(seed), run.mono_tuples, run.mono_ms,
                                   run.mono_ok ? "ok" : "timeout"});
            if (run.mono_ok && run.decomp_ok &&
                run.mono_ms > config.baseline_factor_guard * run.decomp_ms &&
                run.mono_ms > 1.0) {
              report.notes.push_back(
                  config.scenario + " n=" + std::to_string(n) + " sigma=" +
                  std::to_string(sigma) + " examples=" + std::to_string(examples) +
                  " seed=" + std::to_string(seed) + ": monolithic baseline " +
                  format_ms(run.mono_ms) + " ms exceeds " +
                  format_ms(config.baseline_factor_guard) + "x decomposition time " +
                  format_ms(run.decomp_ms) + " ms");
            }
          }
          runs.push_back(run);
        }

        auto mean = [&](auto proj) {
          double acc = 0;
          for (const CellRun& r : runs) acc += proj(r);
          return acc / static_cast<double>(runs.size());
        };
        bool all_decomp_ok = std::all_of(runs.begin(), runs.end(),
                                         [](const CellRun& r) { return r.decomp_ok; });
        report.rows.push_back({config.scenario, n, sigma, examples, "mean",
                               mean([](const CellRun& r) { return r.tuples; }),
                               mean([](const CellRun& r) { return r.decomp_ms; }),
                               all_decomp_ok ? "ok" : "timeout"});
        if (config.monolithic_baseline) {
          bool all_mono_ok = std::all_of(runs.begin(), runs.end(),
                                         [](const CellRun& r) { return r.mono_ok; });
          report.rows.push_back({config.scenario + "-mono", n, sigma, examples, "mean",
                                 mean([](const CellRun& r) { return r.mono_tuples; }),
                                 mean([](const CellRun& r) { return r.mono_ms; }),
                                 all_mono_ok ? "ok" : "timeout"});
        }

        bool none_ok = std::none_of(runs.begin(), runs.end(),
                                    [](const CellRun& r) { return r.decomp_ok; });
        if (config.stop_on_all_timeout && none_ok) sweep_dead = true;
      }
    }
  }
  return report;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "scenario,n,sigma,num_examples,seed,frontier_tuples,wall_ms,status\n";
  for (const BenchRow& r : rows) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.6g,%.3f", r.frontier_tuples, r.wall_ms);
    out << r.scenario << ',' << r.n << ',' << r.sigma << ',' << r.num_examples << ','
        << r.seed << ',' << buf << ',' << r.status << '\n';
  }
}

BenchConfig desk_q1(bool full_grid) {
  BenchConfig c;
  c.scenario = "q1";
  if (full_grid) {
    c.alphabet_sizes = {2, 4};
    for (std::uint32_t n = 2; n <= 12; ++n) c.num_dfas.push_back(n);
    c.num_examples = {10};
    for (std::uint64_t s = 1; s <= 10; ++s) c.seeds.push_back(s);
    c.timeout = std::chrono::minutes{10};
  } else {
    c.alphabet_sizes = {2};
    c.num_dfas = {2, 3, 4, 5, 6};
    c.num_examples = {10};
    c.seeds = {1, 2, 3};
    c.timeout = std::chrono::seconds{60};
    c.timing_repetitions = 5;
  }
  return c;
}

BenchConfig desk_q2(bool full_grid) {
  BenchConfig c;
  c.scenario = "q2";
  if (full_grid) {
    c.alphabet_sizes = {4};
    c.num_dfas = {2};
    for (std::size_t e = 10; e <= 190; e += 10) c.num_examples.push_back(e);
    for (std::uint64_t s = 1; s <= 10; ++s) c.seeds.push_back(s);
    c.timeout = std::chrono::minutes{10};
  } else {
    c.alphabet_sizes = {4};
    c.num_dfas = {2};
    c.num_examples = {10, 20, 30, 40, 50, 60};
    c.seeds = {1, 2, 3};
    c.timeout = std::chrono::seconds{60};
    c.timing_repetitions = 3;
  }
  return c;
}

}  // namespace dfadec
