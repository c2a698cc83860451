#include <doctest.h>

#include <sstream>

#include "dfadec/errors.hpp"
#include "dfadec/satgate.hpp"
#include "dfadec/taskgen.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace dfadec;

TEST_CASE("single-pair ground truth matches the first-occurrence oracle") {
  PartialOrderTask task(fixtures::ab(), {{0, 1}});
  Decomposition gt = ground_truth(task);
  REQUIRE(gt.members().size() == 1);
  CHECK(gt.members()[0].num_states() == 3);
  for (const Word& w : oracle::all_words(2, 4))
    CHECK(gt.accepts(w) == oracle::ordering_accepts(w, 0, 1));
}

TEST_CASE("two-pair ground truth labels the toy words") {
  PartialOrderTask task(fixtures::yrbn(), {{0, 1}, {2, 3}});
  Decomposition gt = ground_truth(task);
  auto alphabet = task.alphabet();
  CHECK(gt.accepts(fixtures::word(alphabet, "yrbn")));
  CHECK_FALSE(gt.accepts(fixtures::word(alphabet, "yrnb")));

  // Conjunction of the two per-pair oracles on every short word.
  for (const Word& w : oracle::all_words(4, 4))
    CHECK(gt.accepts(w) ==
          (oracle::ordering_accepts(w, 0, 1) && oracle::ordering_accepts(w, 2, 3)));
}

TEST_CASE("task construction invariants") {
  CHECK_THROWS_AS(PartialOrderTask(fixtures::ab(), {}), InputError);
  CHECK_THROWS_AS(PartialOrderTask(fixtures::ab(), {{0, 0}}), InputError);
  CHECK_THROWS_AS(PartialOrderTask(fixtures::ab(), {{0, 7}}), InputError);
}

TEST_CASE("default tasks reuse one orientation when symbols run out") {
  PartialOrderTask two_symbols = PartialOrderTask::make_default(3, 2);
  for (const OrderingPair& p : two_symbols.orderings()) {
    CHECK(p.before == 0);
    CHECK(p.after == 1);
  }
  PartialOrderTask four_symbols = PartialOrderTask::make_default(2, 4);
  CHECK(four_symbols.orderings()[0].before == 0);
  CHECK(four_symbols.orderings()[0].after == 1);
  CHECK(four_symbols.orderings()[1].before == 2);
  CHECK(four_symbols.orderings()[1].after == 3);
}

TEST_CASE("generated samples are balanced, labeled by the ground truth, and deterministic") {
  PartialOrderTask task(fixtures::yrbn(), {{0, 1}, {2, 3}});
  Decomposition gt = ground_truth(task);

  LabeledSample sample = generate_sample(task, 10, 42);
  CHECK(sample.positives().size() == 5);
  CHECK(sample.negatives().size() == 5);
  CHECK(is_consistent(gt, sample));
  for (const Word& w : sample.positives()) CHECK(gt.accepts(w));
  for (const Word& w : sample.negatives()) CHECK_FALSE(gt.accepts(w));

  CHECK(generate_sample(task, 10, 42) == sample);
  CHECK_FALSE(generate_sample(task, 10, 43) == sample);
}

TEST_CASE("generation validates the requested count") {
  PartialOrderTask task(fixtures::ab(), {{0, 1}});
  CHECK_THROWS_AS(generate_sample(task, 0, 1), InputError);
  CHECK_THROWS_AS(generate_sample(task, 7, 1), InputError);
}

TEST_CASE("an empty positive class is an explicit generation error") {
  // The shortest positive word has length 2, so a length bound of 1
  // leaves the positive class empty.
  PartialOrderTask task(fixtures::ab(), {{0, 1}});
  CHECK_THROWS_WITH_AS(generate_sample(task, 4, 1, 1),
                       doctest::Contains("positive"), GenerationError);
}

TEST_CASE("a tiny bench sweep emits the stable CSV layout") {
  BenchConfig config;
  config.scenario = "smoke";
  config.alphabet_sizes = {2};
  config.num_dfas = {2};
  config.num_examples = {4};
  config.seeds = {1, 2};
  config.timeout = std::chrono::seconds{30};

  InternalBackend backend;
  BenchReport report = run_bench(config, backend);
  // 2 seeds x (decomp + mono) + 2 mean rows.
  CHECK(report.rows.size() == 6);

  std::ostringstream out;
  write_csv(out, report.rows);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "scenario,n,sigma,num_examples,seed,frontier_tuples,wall_ms,status");
  std::string row;
  std::size_t rows = 0, commas_ok = 0;
  while (std::getline(lines, row)) {
    ++rows;
    if (std::count(row.begin(), row.end(), ',') == 7) ++commas_ok;
  }
  CHECK(rows == 6);
  CHECK(commas_ok == rows);
  for (const BenchRow& r : report.rows) CHECK(r.status == "ok");
}

TEST_CASE("desk and full grids differ in scale") {
  CHECK(desk_q1(false).num_dfas.back() == 6);
  CHECK(desk_q1(true).num_dfas.back() == 12);
  CHECK(desk_q2(false).num_examples.back() == 60);
  CHECK(desk_q2(true).num_examples.back() == 190);
  CHECK(desk_q1(true).timeout == std::chrono::minutes{10});
}
