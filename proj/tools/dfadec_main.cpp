// Command-line front end: identify / frontier / bench / score / export.
//
// Exit codes: 0 success (SAT for identify), 1 UNSAT, 2 error, 3 timeout
// or incomplete frontier.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dfadec/encode.hpp"
#include "dfadec/errors.hpp"
#include "dfadec/io.hpp"
#include "dfadec/pareto.hpp"
#include "dfadec/satgate.hpp"
#include "dfadec/sizing.hpp"
#include "dfadec/taskgen.hpp"

namespace {

using dfadec::State;

constexpr int kExitOk = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitError = 2;
constexpr int kExitTimeout = 3;

struct CommonOpts {
  std::string input;
  std::string config_path;
  std::string backend = "internal";
  std::string start = "ones";
  std::string out_dir;
  std::uint32_t n = 0;
  std::string sizes;
  bool no_symmetry = false;
  bool json = false;
  std::int64_t timeout_ms = 0;         // per solve call
  std::int64_t global_timeout_ms = 0;  // whole search
  State size_cap = 0;
  unsigned parallelism = 1;
  std::uint64_t seed = 1;
};

void add_search_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "JSON config file; flags override its values");
  cmd->add_option("--n", o.n, "number of decomposition members");
  cmd->add_flag("--no-symmetry", o.no_symmetry, "disable symmetry-breaking clauses");
  cmd->add_option("--timeout-ms", o.timeout_ms, "per-solve time budget in milliseconds");
  cmd->add_option("--global-timeout-ms", o.global_timeout_ms,
                  "whole-search time budget in milliseconds");
  cmd->add_option("--size-cap", o.size_cap, "maximum member size (default: |APTA|+1)");
  cmd->add_option("--start", o.start, "start tuple: ones (default) or twos")
      ->check(CLI::IsMember({"ones", "twos"}));
  cmd->add_option("--backend", o.backend,
                  "SAT backend: internal (default), dimacs or dimacs:<path>");
  cmd->add_option("--parallel", o.parallelism, "intra-layer solver threads");
  cmd->add_option("--seed", o.seed, "random seed (generators only)");
  cmd->add_flag("--json", o.json, "machine-readable JSON output");
  cmd->add_option("--out", o.out_dir, "directory for JSON/DOT artifacts");
}

// Config file values fill in any flag the user did not pass explicitly.
void apply_config(const CLI::App* cmd, CommonOpts& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw dfadec::InputError("cannot open config file: " + o.config_path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw dfadec::ParseError(e.what());
  }
  auto unset = [&](const std::string& flag) {
    auto* opt = cmd->get_option_no_throw(flag);
    return opt != nullptr && opt->count() == 0;
  };
  if (doc.contains("n") && unset("--n")) o.n = doc["n"].get<std::uint32_t>();
  if (doc.contains("symmetry") && unset("--no-symmetry"))
    o.no_symmetry = !doc["symmetry"].get<bool>();
  if (doc.contains("timeout_ms") && unset("--timeout-ms"))
    o.timeout_ms = doc["timeout_ms"].get<std::int64_t>();
  if (doc.contains("global_timeout_ms") && unset("--global-timeout-ms"))
    o.global_timeout_ms = doc["global_timeout_ms"].get<std::int64_t>();
  if (doc.contains("size_cap") && unset("--size-cap"))
    o.size_cap = doc["size_cap"].get<State>();
  if (doc.contains("start") && unset("--start")) o.start = doc["start"].get<std::string>();
  if (doc.contains("backend") && unset("--backend"))
    o.backend = doc["backend"].get<std::string>();
  if (doc.contains("parallelism") && unset("--parallel"))
    o.parallelism = doc["parallelism"].get<unsigned>();
  if (doc.contains("seed") && unset("--seed")) o.seed = doc["seed"].get<std::uint64_t>();
}

dfadec::SearchOptions to_search_options(const CommonOpts& o) {
  dfadec::SearchOptions opts;
  opts.symmetry = !o.no_symmetry;
  opts.start = o.start == "twos" ? dfadec::StartTuple::Twos : dfadec::StartTuple::Ones;
  opts.solve_budget = std::chrono::milliseconds(o.timeout_ms);
  opts.global_budget = std::chrono::milliseconds(o.global_timeout_ms);
  opts.size_cap = o.size_cap;
  opts.parallelism = o.parallelism;
  return opts;
}

dfadec::SizeTuple parse_sizes(const std::string& text) {
  dfadec::SizeTuple sizes;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ','))
    sizes.push_back(static_cast<State>(std::stoul(token)));
  if (sizes.empty()) throw dfadec::InputError("--sizes must list at least one state count");
  return sizes;
}

void write_decomposition_artifacts(const dfadec::Decomposition& decomp,
                                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "decomposition.json");
    out << dfadec::decomposition_to_json(decomp).dump(2) << '\n';
  }
  for (std::size_t k = 0; k < decomp.members().size(); ++k) {
    std::ofstream out(dir / ("dfa_" + std::to_string(k) + ".dot"));
    out << dfadec::to_dot(decomp.members()[k], "dfa_" + std::to_string(k));
  }
}

void print_decomposition_summary(const dfadec::Decomposition& decomp) {
  for (std::size_t k = 0; k < decomp.members().size(); ++k) {
    const dfadec::Dfa& d = decomp.members()[k];
    std::cout << "  dfa " << k << ": " << d.num_states() << " states, accepting {";
    for (std::size_t i = 0; i < d.accepting_states().size(); ++i)
      std::cout << (i ? "," : "") << d.accepting_states()[i];
    std::cout << "}, initial " << d.initial() << '\n';
  }
}

int run_identify(const CommonOpts& o, std::string& stage) {
  dfadec::LabeledSample sample = dfadec::read_sample_file(o.input);
  if (o.sizes.empty())
    throw dfadec::InputError("identify needs explicit --sizes (use frontier otherwise)");
  dfadec::SizeTuple sizes = parse_sizes(o.sizes);
  if (o.n != 0 && o.n != sizes.size())
    throw dfadec::InputError("--n disagrees with the number of --sizes entries");

  stage = "encoding";
  dfadec::Apta apta = dfadec::build_apta(sample);
  dfadec::Encoding enc =
      dfadec::encode(apta, sizes, {.symmetry_breaking = !o.no_symmetry});
  stage = "solving";
  auto backend = dfadec::make_backend(o.backend);
  dfadec::SolveResult result =
      backend->solve(enc.cnf, std::chrono::milliseconds(o.timeout_ms));
  stage = "writing output";

  if (result.status == dfadec::SolveStatus::Timeout) {
    if (o.json) {
      nlohmann::json doc{{"version", dfadec::kFormatVersion}, {"status", "timeout"}};
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << "TIMEOUT\n";
    }
    return kExitTimeout;
  }
  if (result.status == dfadec::SolveStatus::Unsat) {
    if (o.json) {
      nlohmann::json doc{{"version", dfadec::kFormatVersion},
                         {"status", "unsat"},
                         {"sizes", sizes}};
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << "UNSAT\n";
    }
    return kExitUnsat;
  }

  dfadec::Decomposition decomp = dfadec::decode(result.model, enc.vars, sample.alphabet());
  if (o.json) {
    nlohmann::json doc;
    doc["version"] = dfadec::kFormatVersion;
    doc["status"] = "sat";
    doc["sizes"] = sizes;
    doc["decomposition"] = dfadec::decomposition_to_json(decomp);
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "SAT " << dfadec::format_tuple(sizes) << '\n';
    print_decomposition_summary(decomp);
  }
  if (!o.out_dir.empty()) write_decomposition_artifacts(decomp, o.out_dir);
  return kExitOk;
}

int run_frontier(const CommonOpts& o, std::string& stage) {
  dfadec::LabeledSample sample = dfadec::read_sample_file(o.input);
  if (o.n == 0) throw dfadec::InputError("frontier needs --n");
  stage = "searching";
  auto backend = dfadec::make_backend(o.backend);
  dfadec::SearchResult result =
      dfadec::search_frontier(sample, o.n, to_search_options(o), *backend);
  stage = "writing output";

  if (o.json) {
    std::cout << dfadec::search_result_to_json(result, o.n).dump(2) << '\n';
  } else {
    std::cout << "frontier (" << result.frontier.size() << " tuple"
              << (result.frontier.size() == 1 ? "" : "s") << ")\n";
    for (const dfadec::FrontierEntry& e : result.frontier) {
      std::cout << dfadec::format_tuple(e.sizes) << '\n';
      print_decomposition_summary(e.witness);
    }
    if (!result.complete) std::cout << "incomplete: " << result.stop_reason << '\n';
  }
  if (!o.out_dir.empty()) {
    std::filesystem::path dir(o.out_dir);
    std::filesystem::create_directories(dir);
    {
      std::ofstream out(dir / "frontier.json");
      out << dfadec::search_result_to_json(result, o.n).dump(2) << '\n';
    }
    for (const dfadec::FrontierEntry& e : result.frontier) {
      std::string label = "tuple";
      for (State s : e.sizes) label += "_" + std::to_string(s);
      write_decomposition_artifacts(e.witness, dir / label);
    }
  }
  return result.complete ? kExitOk : kExitTimeout;
}

int run_score(const CommonOpts& o) {
  dfadec::Decomposition decomp = dfadec::read_decomposition_file(o.input);
  dfadec::DescriptionLength dl = dfadec::decomposition_dl(decomp);
  char nats[64], bits[64];
  std::snprintf(nats, sizeof(nats), "%.12g", dl.nats);
  std::snprintf(bits, sizeof(bits), "%.12g", dl.bits());
  if (o.json) {
    nlohmann::json doc{{"version", dfadec::kFormatVersion},
                       {"nats", dl.nats},
                       {"bits", dl.bits()}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "nats " << nats << '\n' << "bits " << bits << '\n';
  }
  return kExitOk;
}

int run_export(const CommonOpts& o, const std::string& cnf_path) {
  if (!cnf_path.empty()) {
    dfadec::LabeledSample sample = dfadec::read_sample_file(o.input);
    if (o.sizes.empty()) throw dfadec::InputError("--cnf export needs --sizes");
    dfadec::SizeTuple sizes = parse_sizes(o.sizes);
    dfadec::Apta apta = dfadec::build_apta(sample);
    dfadec::Encoding enc =
        dfadec::encode(apta, sizes, {.symmetry_breaking = !o.no_symmetry});
    std::ofstream out(cnf_path);
    if (!out) throw dfadec::InputError("cannot write " + cnf_path);
    dfadec::write_dimacs(out, enc.cnf, &enc.vars);
    std::cout << "wrote " << cnf_path << " (" << enc.cnf.num_vars() << " vars, "
              << enc.cnf.num_clauses() << " clauses)\n";
    return kExitOk;
  }
  if (o.out_dir.empty()) throw dfadec::InputError("export needs --out or --cnf");
  dfadec::Decomposition decomp = dfadec::read_decomposition_file(o.input);
  write_decomposition_artifacts(decomp, o.out_dir);
  std::cout << "wrote " << decomp.members().size() << " DOT files to " << o.out_dir << '\n';
  return kExitOk;
}

int run_bench(const CommonOpts& o, const std::string& scenario, bool full_grid,
              std::uint64_t num_seeds, const std::string& csv_path, bool no_baseline,
              double factor_guard) {
  auto backend = dfadec::make_backend(o.backend);
  std::vector<dfadec::BenchConfig> configs;
  if (scenario == "q1" || scenario == "both") configs.push_back(dfadec::desk_q1(full_grid));
  if (scenario == "q2" || scenario == "both") configs.push_back(dfadec::desk_q2(full_grid));
  if (configs.empty()) throw dfadec::InputError("unknown scenario '" + scenario + "'");

  std::vector<dfadec::BenchRow> rows;
  for (dfadec::BenchConfig& config : configs) {
    if (num_seeds > 0) {
      config.seeds.clear();
      for (std::uint64_t s = 1; s <= num_seeds; ++s) config.seeds.push_back(o.seed + s - 1);
    }
    if (o.timeout_ms > 0) config.timeout = std::chrono::milliseconds(o.timeout_ms);
    config.monolithic_baseline = !no_baseline;
    config.baseline_factor_guard = factor_guard;
    dfadec::BenchReport report = dfadec::run_bench(config, *backend);
    rows.insert(rows.end(), report.rows.begin(), report.rows.end());
    for (const std::string& note : report.notes) std::cerr << "note: " << note << '\n';
  }

  if (csv_path.empty()) {
    dfadec::write_csv(std::cout, rows);
  } else {
    std::ofstream out(csv_path);
    if (!out) throw dfadec::InputError("cannot write " + csv_path);
    dfadec::write_csv(out, rows);
    std::cout << "wrote " << rows.size() << " rows to " << csv_path << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dfadec: identify Pareto-optimal DFA decompositions from labeled examples"};
  app.require_subcommand(1);

  CommonOpts identify_opts, frontier_opts, score_opts, export_opts, bench_opts;

  auto* identify = app.add_subcommand(
      "identify", "one SAT solve for explicit member sizes against a sample");
  identify->add_option("--input", identify_opts.input, "sample file (JSON or Abbadingo)")
      ->required();
  identify->add_option("--sizes", identify_opts.sizes, "member sizes, e.g. 3,3");
  add_search_flags(identify, identify_opts);

  auto* frontier =
      app.add_subcommand("frontier", "enumerate the Pareto frontier of size tuples");
  frontier->add_option("--input", frontier_opts.input, "sample file (JSON or Abbadingo)")
      ->required();
  add_search_flags(frontier, frontier_opts);

  auto* score = app.add_subcommand("score", "description length of a decomposition");
  score->add_option("--input", score_opts.input, "decomposition JSON file")->required();
  score->add_flag("--json", score_opts.json, "machine-readable JSON output");

  std::string export_cnf_path;
  auto* exp = app.add_subcommand("export", "write DOT files or a DIMACS instance");
  exp->add_option("--input", export_opts.input, "decomposition JSON, or sample with --cnf")
      ->required();
  exp->add_option("--out", export_opts.out_dir, "directory for DOT output");
  exp->add_option("--cnf", export_cnf_path, "write the encoding of --input/--sizes here");
  exp->add_option("--sizes", export_opts.sizes, "member sizes for --cnf");
  exp->add_flag("--no-symmetry", export_opts.no_symmetry, "disable symmetry clauses");

  std::string bench_scenario = "both";
  std::string bench_csv;
  bool bench_full_grid = false, bench_no_baseline = false;
  std::uint64_t bench_seeds = 0;
  double bench_factor_guard = 4.0;
  auto* bench = app.add_subcommand("bench", "scaling sweeps over generated ordering tasks");
  bench->add_option("--scenario", bench_scenario, "q1, q2 or both (default)");
  bench->add_flag("--full-grid", bench_full_grid, "full-size sweep instead of desk scale");
  bench->add_option("--seeds", bench_seeds, "number of seeds (starting at --seed)");
  bench->add_option("--out", bench_csv, "CSV output path (default: stdout)");
  bench->add_flag("--no-baseline", bench_no_baseline, "skip the monolithic baseline");
  bench->add_option("--factor-guard", bench_factor_guard,
                    "report cells where baseline exceeds this factor");
  bench->add_option("--timeout-ms", bench_opts.timeout_ms, "per-cell budget override");
  bench->add_option("--seed", bench_opts.seed, "first seed value");
  bench->add_option("--backend", bench_opts.backend, "SAT backend");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints help or the usage error
    return rc == 0 ? kExitOk : kExitError;
  }

  std::string stage = "starting";
  try {
    if (identify->parsed()) {
      stage = "reading input";
      apply_config(identify, identify_opts);
      return run_identify(identify_opts, stage);
    }
    if (frontier->parsed()) {
      stage = "reading input";
      apply_config(frontier, frontier_opts);
      return run_frontier(frontier_opts, stage);
    }
    if (score->parsed()) {
      stage = "scoring";
      return run_score(score_opts);
    }
    if (exp->parsed()) {
      stage = "exporting";
      return run_export(export_opts, export_cnf_path);
    }
    if (bench->parsed()) {
      stage = "benchmarking";
      return run_bench(bench_opts, bench_scenario, bench_full_grid, bench_seeds, bench_csv,
                       bench_no_baseline, bench_factor_guard);
    }
  } catch (const dfadec::ParseError& e) {
    std::cerr << "error (parsing): " << e.what() << '\n';
    return kExitError;
  } catch (const dfadec::EngineError& e) {
    std::cerr << "error (sat engine): " << e.what() << '\n';
    return kExitError;
  } catch (const dfadec::SearchError& e) {
    std::cerr << "error (search): " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error (" << stage << "): " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
