#include <doctest.h>

#include <random>
#include <set>

#include "dfadec/errors.hpp"
#include "dfadec/io.hpp"
#include "dfadec/pareto.hpp"
#include "dfadec/taskgen.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace dfadec;

namespace {

const InternalBackend& backend() {
  static InternalBackend b;
  return b;
}

std::set<SizeTuple> tuple_set(const SearchResult& r) {
  std::set<SizeTuple> out;
  for (const FrontierEntry& e : r.frontier) out.insert(e.sizes);
  return out;
}

LabeledSample random_two_symbol_sample(std::mt19937_64& rng) {
  std::set<Word, ShortlexLess> words;
  std::size_t target = 3 + rng() % 8;
  while (words.size() < target) {
    Word w(rng() % 5);
    for (auto& a : w) a = static_cast<Symbol>(rng() % 2);
    words.insert(std::move(w));
  }
  std::vector<Word> positives, negatives;
  for (const Word& w : words) (rng() % 2 ? positives : negatives).push_back(w);
  return LabeledSample(fixtures::ab(), std::move(positives), std::move(negatives));
}

}  // namespace

TEST_CASE("dominance is the strict product order") {
  CHECK(dominates({2, 3}, {3, 3}));
  CHECK_FALSE(dominates({3, 3}, {2, 4}));
  CHECK_FALSE(dominates({2, 4}, {3, 3}));
  CHECK_FALSE(dominates({3, 3}, {3, 3}));
  CHECK_THROWS_AS(dominates({1}, {1, 2}), InputError);
}

TEST_CASE("successors increment one coordinate and stay ordered") {
  CHECK(successors({1, 1}) == std::vector<SizeTuple>{{1, 2}});
  CHECK(successors({2, 2}) == std::vector<SizeTuple>{{2, 3}});
  CHECK(successors({2, 3}) == std::vector<SizeTuple>{{2, 4}, {3, 3}});
  CHECK(successors({2}) == std::vector<SizeTuple>{{3}});
}

TEST_CASE("eps-positive a-negative sample has frontier (1,2)") {
  LabeledSample sample(fixtures::ab(), {{}}, {fixtures::word(fixtures::ab(), "a")});

  // Brute force over every decomposition with coordinate sum <= 4.
  CHECK_FALSE(oracle::pair_exists(sample, 1, 1));
  CHECK(oracle::pair_exists(sample, 1, 2));
  CHECK(oracle::pair_exists(sample, 2, 2));  // dominated by (1,2)

  SearchResult result = search_frontier(sample, 2, {}, backend());
  CHECK(result.complete);
  CHECK(tuple_set(result) == std::set<SizeTuple>{{1, 2}});
  CHECK(is_consistent(result.frontier[0].witness, sample));
}

TEST_CASE("no negatives means the all-ones decomposition wins") {
  auto alphabet = fixtures::ab();
  LabeledSample sample(alphabet, {fixtures::word(alphabet, "ab"), {}}, {});
  SearchResult result = search_frontier(sample, 2, {}, backend());
  CHECK(tuple_set(result) == std::set<SizeTuple>{{1, 1}});
}

TEST_CASE("frontier equals the exhaustive Pareto set on random samples") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int round = 0; round < 40 && checked < 12; ++round) {
    LabeledSample sample = random_two_symbol_sample(rng);
    // The exhaustive referee is exact only when the whole frontier fits
    // under the cap; a monolithic solution of size <= 3 guarantees that.
    auto mono = oracle::min_dfa_size(sample, 3);
    if (!mono) continue;
    ++checked;
    std::set<SizeTuple> expected = oracle::pareto_two(sample, 3);
    SearchResult result = search_frontier(sample, 2, {}, backend());
    REQUIRE(result.complete);
    CHECK(tuple_set(result) == expected);
    for (const FrontierEntry& e : result.frontier)
      CHECK(is_consistent(e.witness, sample));
  }
  CHECK(checked >= 12);
}

TEST_CASE("frontier is an antichain") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 8; ++round) {
    LabeledSample sample = random_two_symbol_sample(rng);
    SearchResult result = search_frontier(sample, 2, {}, backend());
    for (const FrontierEntry& a : result.frontier)
      for (const FrontierEntry& b : result.frontier) {
        if (a.sizes == b.sizes) continue;
        CHECK_FALSE(dominates(a.sizes, b.sizes));
      }
  }
}

TEST_CASE("n=1 frontier is the minimal consistent DFA size") {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int round = 0; round < 30 && checked < 10; ++round) {
    LabeledSample sample = random_two_symbol_sample(rng);
    auto expected = oracle::min_dfa_size(sample, 4);
    if (!expected) continue;
    ++checked;
    SearchResult result = search_frontier(sample, 1, {}, backend());
    REQUIRE(result.frontier.size() == 1);
    CHECK(result.frontier[0].sizes == SizeTuple{*expected});
  }
  CHECK(checked >= 10);
}

TEST_CASE("a characteristic sample pins the nine-state monolithic DFA") {
  // Access words for every product state, their one-symbol extensions,
  // and completion suffixes for every component state pair: any DFA
  // consistent with this sample must be the full two-ordering product.
  auto alphabet = fixtures::yrbn();
  PartialOrderTask task(alphabet, {{0, 1}, {2, 3}});
  Decomposition gt = ground_truth(task);

  std::vector<Word> acc1{{}, {0}, {0, 1}}, acc2{{}, {2}, {2, 3}};
  std::vector<Word> fin1{{0, 1}, {1}, {}}, fin2{{2, 3}, {3}, {}};
  auto cat = [](const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
  };
  std::set<Word, ShortlexLess> words;
  for (const Word& a1 : acc1)
    for (const Word& a2 : acc2) {
      Word access = cat(a1, a2);
      std::vector<Word> kernel{access};
      for (Symbol s = 0; s < 4; ++s) kernel.push_back(cat(access, {s}));
      for (const Word& k : kernel)
        for (const Word& c1 : fin1)
          for (const Word& c2 : fin2) words.insert(cat(k, cat(c1, c2)));
    }
  std::vector<Word> pos, neg;
  for (const Word& w : words) (gt.accepts(w) ? pos : neg).push_back(w);
  LabeledSample sample(alphabet, std::move(pos), std::move(neg));

  SearchResult result = search_frontier(sample, 1, {}, backend());
  REQUIRE(result.complete);
  CHECK(tuple_set(result) == std::set<SizeTuple>{{9}});
  CHECK(minimize(result.frontier[0].witness.members()[0]) == minimize(product(gt)));
}

TEST_CASE("the search solves each explored tuple exactly once") {
  // Reconstruct the BFS with the exhaustive oracle as referee and count
  // the tuples it should solve; multiple DAG paths must not re-solve.
  // A size-3 monolithic witness keeps every explored tuple within the
  // oracle's enumeration reach.
  std::mt19937_64 rng(61);
  std::optional<LabeledSample> chosen;
  while (!chosen) {
    LabeledSample candidate = random_two_symbol_sample(rng);
    if (oracle::min_dfa_size(candidate, 3) == State{3}) chosen = candidate;
  }
  const LabeledSample& sample = *chosen;

  std::set<SizeTuple> expected_solved;
  std::set<SizeTuple> frontier_ref;
  std::set<SizeTuple> visited;
  std::vector<SizeTuple> layer{{1, 1}};
  visited.insert({1, 1});
  while (!layer.empty()) {
    std::vector<SizeTuple> next;
    for (const SizeTuple& t : layer) {
      bool dominated = false;
      for (const SizeTuple& f : frontier_ref)
        if (dominates(f, t)) dominated = true;
      if (dominated) continue;
      REQUIRE(t[1] <= 4);  // stays enumerable thanks to the size-3 witness
      expected_solved.insert(t);
      if (oracle::pair_exists(sample, t[0], t[1])) {
        frontier_ref.insert(t);
      } else {
        for (const SizeTuple& s : successors(t))
          if (visited.insert(s).second) next.push_back(s);
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }

  SearchResult result = search_frontier(sample, 2, {}, backend());
  CHECK(result.stats.tuples_solved == expected_solved.size());
  CHECK(result.stats.solve_ms.size() == expected_solved.size());
  CHECK(tuple_set(result) == frontier_ref);
}

TEST_CASE("parallel layers return byte-identical results") {
  PartialOrderTask task(fixtures::yrbn(), {{0, 1}, {2, 3}});
  LabeledSample sample = generate_sample(task, 30, 6);

  SearchOptions sequential;
  SearchOptions parallel;
  parallel.parallelism = 4;

  SearchResult a = search_frontier(sample, 2, sequential, backend());
  SearchResult b = search_frontier(sample, 2, parallel, backend());
  REQUIRE(a.complete);
  REQUIRE(b.complete);
  CHECK(search_result_to_json(a, 2).dump(2) == search_result_to_json(b, 2).dump(2));
}

TEST_CASE("the twos start reproduces the restricted search graph") {
  LabeledSample sample(fixtures::ab(), {{}}, {fixtures::word(fixtures::ab(), "a")});
  SearchOptions opts;
  opts.start = StartTuple::Twos;
  SearchResult result = search_frontier(sample, 2, opts, backend());
  CHECK(tuple_set(result) == std::set<SizeTuple>{{2, 2}});
}

TEST_CASE("global budget produces an incomplete report") {
  PartialOrderTask task(fixtures::yrbn(), {{0, 1}, {2, 3}});
  LabeledSample sample = generate_sample(task, 30, 2);
  SearchOptions opts;
  opts.global_budget = std::chrono::microseconds{1};
  SearchResult result = search_frontier(sample, 2, opts, backend());
  CHECK_FALSE(result.complete);
  CHECK(result.stop_reason.find("budget") != std::string::npos);
}

TEST_CASE("per-solve timeout aborts with the offending tuple") {
  PartialOrderTask task = PartialOrderTask::make_default(4, 4);
  LabeledSample sample = generate_sample(task, 40, 3);
  SearchOptions opts;
  opts.solve_budget = std::chrono::microseconds{1};
  SearchResult result = search_frontier(sample, 4, opts, backend());
  CHECK_FALSE(result.complete);
  CHECK(result.stop_reason.find("timeout at size tuple") != std::string::npos);
}

TEST_CASE("the size cap is an explicit error, not a truncation") {
  PartialOrderTask task(fixtures::yrbn(), {{0, 1}, {2, 3}});
  LabeledSample sample = generate_sample(task, 30, 2);
  SearchOptions opts;
  opts.size_cap = 2;
  CHECK_THROWS_AS(search_frontier(sample, 2, opts, backend()), SearchError);
}

TEST_CASE("n must be positive") {
  LabeledSample sample(fixtures::ab(), {}, {});
  CHECK_THROWS_AS(search_frontier(sample, 0, {}, backend()), InputError);
}
