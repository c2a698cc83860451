#include <doctest.h>

#include <random>
#include <sstream>

#include "dfadec/errors.hpp"
#include "dfadec/io.hpp"
#include "fixtures.hpp"

using namespace dfadec;

TEST_CASE("sample JSON round trip") {
  auto alphabet = fixtures::yrbn();
  LabeledSample sample(alphabet, {fixtures::word(alphabet, "yrbn"), {}},
                       {fixtures::word(alphabet, "yrnb")});
  LabeledSample back = sample_from_json(sample_to_json(sample));
  CHECK(back == sample);
}

TEST_CASE("decomposition JSON round trip is the identity") {
  auto decomp = fixtures::two_orderings();
  Decomposition back = decomposition_from_json(decomposition_to_json(decomp));
  CHECK(back == decomp);
}

TEST_CASE("dfa JSON round trip") {
  Dfa d = fixtures::ordering_dfa(fixtures::yrbn(), 0, 1);
  CHECK(dfa_from_json(dfa_to_json(d)) == d);
}

TEST_CASE("unsupported versions are rejected") {
  auto doc = decomposition_to_json(fixtures::two_orderings());
  doc["version"] = "v2";
  CHECK_THROWS_AS(decomposition_from_json(doc), ParseError);
}

TEST_CASE("a missing delta entry is reported with state and symbol") {
  auto doc = decomposition_to_json(fixtures::two_orderings());
  doc["dfas"][1]["delta"][2].erase(3);  // drop state 2's entry for symbol "n"
  CHECK_THROWS_WITH_AS(decomposition_from_json(doc),
                       doctest::Contains("missing delta entry for state 2 on symbol 'n'"),
                       ParseError);
}

TEST_CASE("oversized delta rows are rejected") {
  auto doc = dfa_to_json(fixtures::ordering_dfa(fixtures::yrbn(), 0, 1));
  doc["delta"][0].push_back(0);
  CHECK_THROWS_WITH_AS(dfa_from_json(doc), doctest::Contains("more entries"), ParseError);
}

TEST_CASE("random decompositions survive the JSON round trip") {
  std::mt19937_64 rng(83);
  for (int round = 0; round < 40; ++round) {
    std::vector<std::string> labels;
    std::size_t sigma = 1 + rng() % 4;
    for (std::size_t i = 0; i < sigma; ++i) labels.push_back(std::string(1, 'a' + i));
    Alphabet alphabet(labels);

    std::size_t n = 1 + rng() % 3;
    std::vector<State> sizes;
    for (std::size_t k = 0; k < n; ++k) sizes.push_back(1 + rng() % 5);
    std::sort(sizes.begin(), sizes.end());

    std::vector<Dfa> members;
    for (State m : sizes) {
      std::vector<State> delta(m * sigma);
      for (auto& t : delta) t = static_cast<State>(rng() % m);
      std::vector<State> accepting;
      for (State s = 0; s < m; ++s)
        if (rng() % 2) accepting.push_back(s);
      members.emplace_back(alphabet, m, static_cast<State>(rng() % m),
                           std::move(accepting), std::move(delta));
    }
    Decomposition decomp(std::move(members));
    CHECK(decomposition_from_json(decomposition_to_json(decomp)) == decomp);
    // Serialization is stable: dumping twice gives identical bytes.
    CHECK(decomposition_to_json(decomp).dump(2) == decomposition_to_json(decomp).dump(2));
  }
}

TEST_CASE("json parse errors carry a position") {
  CHECK_THROWS_WITH_AS(read_sample_text("{ \"alphabet\": [,,"), doctest::Contains("column"),
                       ParseError);
}

TEST_CASE("unknown symbols in sample files are input errors") {
  nlohmann::json doc{{"version", "v1"},
                     {"alphabet", {"y", "r", "b", "n"}},
                     {"positives", nlohmann::json::array({{"q", "r"}})},
                     {"negatives", nlohmann::json::array()}};
  CHECK_THROWS_WITH_AS(sample_from_json(doc), doctest::Contains("unknown symbol 'q'"),
                       InputError);
}

TEST_CASE("abbadingo reader") {
  std::istringstream in("3 2\n1 2 0 1\n0 1 0\n1 0\n");
  LabeledSample sample = read_abbadingo(in);
  CHECK(sample.alphabet().size() == 2);
  REQUIRE(sample.positives().size() == 2);
  REQUIRE(sample.negatives().size() == 1);
  CHECK(sample.positives()[0] == Word{});       // "1 0" : empty positive
  CHECK(sample.positives()[1] == Word{0, 1});   // "1 2 0 1"
  CHECK(sample.negatives()[0] == Word{0});      // "0 1 0"
}

TEST_CASE("abbadingo malformed header") {
  std::istringstream in("bogus\n");
  CHECK_THROWS_AS(read_abbadingo(in), ParseError);
}

TEST_CASE("sample text auto-detection") {
  LabeledSample json_sample = read_sample_text(
      "  {\"alphabet\":[\"a\"],\"positives\":[[\"a\"]],\"negatives\":[]}");
  CHECK(json_sample.positives().size() == 1);
  LabeledSample abba_sample = read_sample_text("1 2\n1 1 0\n");
  CHECK(abba_sample.positives().size() == 1);
}

TEST_CASE("dot output for a single-state DFA merges the loop label") {
  Dfa d = Dfa::universal(fixtures::ab());
  std::string dot = to_dot(d);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("0 -> 0 [label=\"a,b\"]") != std::string::npos);
}

TEST_CASE("dot output marks the initial state and accepting states") {
  Dfa d = fixtures::ordering_dfa(fixtures::yrbn(), 0, 1);
  std::string dot = to_dot(d, "g");
  CHECK(dot.find("digraph g {") != std::string::npos);
  CHECK(dot.find("__start -> 0") != std::string::npos);
  CHECK(dot.find("1 [shape=circle]") != std::string::npos);   // progress state
  CHECK(dot.find("2 [shape=doublecircle]") != std::string::npos);
}
