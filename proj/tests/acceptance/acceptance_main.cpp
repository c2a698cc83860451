// Acceptance suite: exercises the full pipeline end to end and prints one
// PASS/FAIL line per criterion. Exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dfadec/encode.hpp"
#include "dfadec/io.hpp"
#include "dfadec/pareto.hpp"
#include "dfadec/satgate.hpp"
#include "dfadec/sizing.hpp"
#include "dfadec/taskgen.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace dfadec;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

const InternalBackend& backend() {
  static InternalBackend b;
  return b;
}

double elapsed_s(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::set<SizeTuple> tuple_set(const SearchResult& r) {
  std::set<SizeTuple> out;
  for (const FrontierEntry& e : r.frontier) out.insert(e.sizes);
  return out;
}

struct CliRun {
  int exit_code = -1;
  std::string output;
};

std::optional<CliRun> run_cli(const std::string& args) {
  const char* cli = std::getenv("DFADEC_CLI");
  if (!cli) return std::nullopt;
  std::string cmd = std::string("'") + cli + "' " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return std::nullopt;
  CliRun run;
  char buf[4096];
  std::size_t got;
  while ((got = ::fread(buf, 1, sizeof(buf), pipe)) > 0) run.output.append(buf, got);
  int rc = ::pclose(pipe);
  run.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return run;
}

LabeledSample random_two_symbol_sample(std::mt19937_64& rng, std::size_t max_words,
                                       std::size_t max_len) {
  std::set<Word, ShortlexLess> words;
  std::size_t target = 3 + rng() % (max_words - 2);
  while (words.size() < target) {
    Word w(rng() % (max_len + 1));
    for (auto& a : w) a = static_cast<Symbol>(rng() % 2);
    words.insert(std::move(w));
  }
  std::vector<Word> positives, negatives;
  for (const Word& w : words) (rng() % 2 ? positives : negatives).push_back(w);
  return LabeledSample(fixtures::ab(), std::move(positives), std::move(negatives));
}

// ---------------------------------------------------------------------
// Criterion 1 (+9): toy reproduction through the CLI, plus determinism.

std::string toy_sample_path;

void criterion_1_and_9() {
  const auto start = clock_type::now();
  PartialOrderTask task(fixtures::yrbn(), {{0, 1}, {2, 3}});
  const std::uint64_t seed = 7;
  const std::size_t max_len = 7;  // long enough words to pin the orderings

  // Escalate the example count until the frontier stabilizes: identical
  // tuple sets and identical minimized witness products on two
  // consecutive rounds. The stable sample is the first of the agreeing
  // pair, so it stays below the 60-example bound.
  std::optional<std::set<SizeTuple>> prev_tuples;
  std::optional<Dfa> prev_product;
  std::size_t prev_count = 0;
  std::size_t stable_count = 0;

  for (std::size_t count = 10; count <= 60; count += 10) {
    LabeledSample sample = generate_sample(task, count, seed, max_len);
    SearchOptions opts;
    opts.parallelism = 4;
    SearchResult result = search_frontier(sample, 2, opts, backend());
    if (!result.complete) break;

    std::optional<Dfa> witness_product;
    for (const FrontierEntry& e : result.frontier)
      if (e.sizes == SizeTuple{3, 3}) witness_product = minimize(product(e.witness));

    if (prev_tuples && witness_product && prev_product &&
        tuple_set(result) == *prev_tuples && *witness_product == *prev_product) {
      stable_count = prev_count;
      break;
    }
    prev_tuples = tuple_set(result);
    prev_product = witness_product;
    prev_count = count;
  }

  if (stable_count == 0 || stable_count >= 60) {
    report(1, false, "frontier never stabilized below 60 examples");
    report(9, false, "skipped: criterion 1 produced no stable sample");
    return;
  }

  // Materialize the stabilized sample and drive the real CLI.
  LabeledSample sample = generate_sample(task, stable_count, seed, max_len);
  auto dir = std::filesystem::temp_directory_path() / "dfadec-acceptance";
  std::filesystem::create_directories(dir);
  toy_sample_path = (dir / "toy.json").string();
  {
    std::ofstream out(toy_sample_path);
    out << sample_to_json(sample).dump(2) << '\n';
  }

  auto run = run_cli("frontier --input '" + toy_sample_path + "' --n 2 --json");
  bool cli_ok = run && run->exit_code == 0;
  bool has_33 = false;
  int product_states = 0;
  if (cli_ok) {
    nlohmann::json doc = nlohmann::json::parse(run->output);
    for (const auto& entry : doc["frontier"])
      if (entry["sizes"] == nlohmann::json::array({3, 3})) {
        has_33 = true;
        Decomposition witness = decomposition_from_json(entry["decomposition"]);
        product_states = static_cast<int>(minimize(product(witness)).num_states());
      }
  }
  double secs = elapsed_s(start);
  report(1, cli_ok && has_33 && product_states == 9 && secs < 60.0,
         "stabilized at " + std::to_string(stable_count) + " examples; (3,3) in frontier; "
         "witness product minimizes to " + std::to_string(product_states) + " states; " +
         std::to_string(secs).substr(0, 5) + " s");

  // Criterion 9: byte-identical JSON across reruns and across sequential
  // vs. parallel search.
  auto again = run_cli("frontier --input '" + toy_sample_path + "' --n 2 --json");
  auto parallel =
      run_cli("frontier --input '" + toy_sample_path + "' --n 2 --json --parallel 4");
  bool deterministic = run && again && parallel && run->output == again->output &&
                       run->output == parallel->output && !run->output.empty();
  report(9, deterministic, "sequential rerun and 4-thread run are byte-identical");
}

// ---------------------------------------------------------------------
// Criterion 2: n=1 frontier equals the brute-force minimal DFA size.

void criterion_2() {
  std::mt19937_64 rng(202);
  int checked = 0, matched = 0;
  while (checked < 50) {
    LabeledSample sample = random_two_symbol_sample(rng, 12, 5);
    auto expected = oracle::min_dfa_size(sample, 4);
    if (!expected) continue;  // beyond the enumeration cap; draw another
    ++checked;
    SearchResult result = search_frontier(sample, 1, {}, backend());
    if (result.complete && result.frontier.size() == 1 &&
        result.frontier[0].sizes == SizeTuple{*expected})
      ++matched;
  }
  report(2, matched == 50,
         std::to_string(matched) + "/50 random samples match the brute-force minimum");
}

// ---------------------------------------------------------------------
// Criteria 3 and 6: decode consistency and the relaxed rejection shape.

void criterion_3_and_6() {
  std::mt19937_64 rng(303);
  int instances = 0, sat_decodes = 0, consistent = 0;
  int exactly_n_minus_1 = 0, accepted_by_all = 0;

  auto examine = [&](const LabeledSample& sample, const SizeTuple& sizes) {
    ++instances;
    Apta apta = build_apta(sample);
    Encoding enc = encode(apta, sizes);
    SolveResult r = backend().solve(enc.cnf, std::chrono::microseconds{0});
    if (r.status != SolveStatus::Sat) return;
    ++sat_decodes;
    Decomposition decoded = decode(r.model, enc.vars, sample.alphabet());
    if (is_consistent(decoded, sample)) ++consistent;
    const std::size_t n = decoded.members().size();
    for (const Word& w : sample.negatives()) {
      std::size_t acceptors = 0;
      for (const Dfa& d : decoded.members())
        if (d.accepts(w)) ++acceptors;
      if (acceptors == n) ++accepted_by_all;
      if (n >= 2 && acceptors == n - 1) ++exactly_n_minus_1;
    }
  };

  // The two-ordering instance plus randomized ones.
  PartialOrderTask task(fixtures::yrbn(), {{0, 1}, {2, 3}});
  examine(generate_sample(task, 20, 5), {3, 3});
  while (instances < 220) {
    LabeledSample sample = random_two_symbol_sample(rng, 8, 4);
    std::size_t n = 1 + rng() % 3;
    SizeTuple sizes;
    for (std::size_t k = 0; k < n; ++k) sizes.push_back(1 + rng() % 3);
    std::sort(sizes.begin(), sizes.end());
    examine(sample, sizes);
  }

  report(3, sat_decodes > 0 && consistent == sat_decodes,
         std::to_string(consistent) + "/" + std::to_string(sat_decodes) +
             " SAT decodes over " + std::to_string(instances) +
             " instances are consistent");
  report(6, accepted_by_all == 0 && exactly_n_minus_1 > 0,
         std::to_string(exactly_n_minus_1) +
             " negatives accepted by exactly n-1 members; none accepted by all");
}

// ---------------------------------------------------------------------
// Criteria 4 and 5: frontier vs. exhaustive Pareto set; symmetry
// breaking leaves frontiers untouched.

void criterion_4_and_5() {
  std::mt19937_64 rng(404);
  int checked = 0, exact = 0, same_tuples = 0;
  std::vector<double> with_sym_ms, without_sym_ms;

  while (checked < 30) {
    LabeledSample sample = random_two_symbol_sample(rng, 10, 4);
    // The exhaustive referee is exact only when the frontier fits under
    // the cap, which a size<=3 monolithic witness guarantees.
    if (!oracle::min_dfa_size(sample, 3)) continue;
    ++checked;

    std::set<SizeTuple> expected = oracle::pareto_two(sample, 3);

    SearchOptions with_sym;
    SearchResult a = search_frontier(sample, 2, with_sym, backend());
    SearchOptions no_sym;
    no_sym.symmetry = false;
    SearchResult b = search_frontier(sample, 2, no_sym, backend());

    if (a.complete && tuple_set(a) == expected) ++exact;
    if (tuple_set(a) == tuple_set(b)) ++same_tuples;
    for (double ms : a.stats.solve_ms) with_sym_ms.push_back(ms);
    for (double ms : b.stats.solve_ms) without_sym_ms.push_back(ms);
  }

  report(4, exact == 30,
         std::to_string(exact) + "/30 frontiers equal the exhaustive Pareto set");

  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v.empty() ? 0.0 : v[v.size() / 2];
  };
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%d/30 identical tuple sets without symmetry clauses "
                "(median solve: %.3f ms with, %.3f ms without)",
                same_tuples, median(with_sym_ms), median(without_sym_ms));
  report(5, same_tuples == 30, buf);
}

// ---------------------------------------------------------------------
// Criterion 7: description length identities.

void criterion_7() {
  std::mt19937_64 rng(707);
  int identity_ok = 0;
  for (int round = 0; round < 100; ++round) {
    auto alphabet = rng() % 2 ? fixtures::ab() : fixtures::yrbn();
    State m = 1 + rng() % 6;
    std::vector<State> delta(m * alphabet.size());
    for (auto& t : delta) t = static_cast<State>(rng() % m);
    std::vector<State> accepting;
    for (State s = 0; s < m; ++s)
      if (rng() % 2) accepting.push_back(s);
    Dfa d(alphabet, m, 0, std::move(accepting), std::move(delta));

    double member = dfa_dl(d).nats;
    double whole = decomposition_dl(Decomposition({d})).nats;
    if (std::abs(whole - member) <= 1e-12 * std::max(1.0, std::abs(member))) ++identity_ok;
  }

  // Independent spreadsheet-style evaluation of the two-ordering pair:
  // per member m=3, |F|=1, z=2 over four symbols.
  double member = 3.0 + 2.0 * std::log(3.0) + 2.0 * std::log(4.0) +
                  2.0 * std::log(3.0) + 2.0 * (std::log(4.0) + 2.0 * std::log(3.0));
  double expected_pair = 2.0 * member - (2.0 * std::log(4.0) + 1.0) - 2.0 * std::log(3.0);
  double actual_pair = decomposition_dl(fixtures::two_orderings()).nats;
  bool pair_ok = std::abs(actual_pair - expected_pair) <= 1e-9;

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%d/100 n=1 identities within 1e-12; pair value %.9f vs %.9f", identity_ok,
                actual_pair, expected_pair);
  report(7, identity_ok == 100 && pair_ok, buf);
}

// ---------------------------------------------------------------------
// Criterion 8: desk-scale scaling sweeps.

void criterion_8() {
  bool all_ok = true;
  std::string detail;

  BenchReport q1 = run_bench(desk_q1(false), backend());
  {
    std::ofstream out("acceptance_q1.csv");
    write_csv(out, q1.rows);
  }
  BenchReport q2 = run_bench(desk_q2(false), backend());
  {
    std::ofstream out("acceptance_q2.csv");
    write_csv(out, q2.rows);
  }

  std::size_t timeouts = 0;
  for (const auto* rep : {&q1, &q2})
    for (const BenchRow& r : rep->rows)
      if (r.status != "ok") ++timeouts;
  if (timeouts > 0) {
    all_ok = false;
    detail += std::to_string(timeouts) + " timeout rows; ";
  }

  // 5 cells x 3 seeds x 2 algorithms + 2 mean rows per cell.
  if (q1.rows.size() != 5 * (3 * 2 + 2) || q2.rows.size() != 6 * (3 * 2 + 2)) {
    all_ok = false;
    detail += "unexpected CSV row counts; ";
  }

  // Mean decomposition solve time must not decrease with n in Q1.
  std::vector<std::pair<std::uint32_t, double>> means;
  for (const BenchRow& r : q1.rows)
    if (r.scenario == "q1" && r.seed == "mean") means.emplace_back(r.n, r.wall_ms);
  std::sort(means.begin(), means.end());
  bool monotone = true;
  for (std::size_t i = 1; i < means.size(); ++i)
    if (means[i].second < means[i - 1].second) monotone = false;
  if (!monotone) {
    all_ok = false;
    detail += "Q1 mean time not monotone in n; ";
  }

  std::ostringstream summary;
  summary << detail << "q1/q2 CSVs written (" << q1.rows.size() << "+" << q2.rows.size()
          << " rows); Q1 means ms:";
  for (auto [n, ms] : means) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), " n=%u:%.2f", n, ms);
    summary << buf;
  }
  report(8, all_ok, summary.str());
}

}  // namespace

int main() {
  criterion_1_and_9();
  criterion_2();
  criterion_3_and_6();
  criterion_4_and_5();
  criterion_7();
  criterion_8();
  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d criteria failed\n", failures);
  return failures;
}
