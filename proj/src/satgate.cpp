#include "dfadec/satgate.hpp"

#include <unistd.h>

#include <array>
#include <cassert>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dfadec/errors.hpp"
#include "dfadec/sat/solver.hpp"

namespace dfadec {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

SolveResult InternalBackend::solve(const CnfInstance& cnf,
                                   std::chrono::microseconds budget) const {
  const auto start = std::chrono::steady_clock::now();
  sat::Solver solver(static_cast<std::size_t>(cnf.num_vars()));
  for (std::size_t c = 0; c < cnf.num_clauses(); ++c) solver.add_clause(cnf.clause(c));

  SolveResult result;
  switch (solver.solve(budget)) {
    case sat::Outcome::Sat:
      result.status = SolveStatus::Sat;
      result.model = solver.model();
      assert(model_satisfies(cnf, result.model));
      break;
    case sat::Outcome::Unsat:
      result.status = SolveStatus::Unsat;
      break;
    case sat::Outcome::Timeout:
      result.status = SolveStatus::Timeout;
      break;
  }
  result.stats.decisions = solver.stats().decisions;
  result.stats.conflicts = solver.stats().conflicts;
  result.stats.wall_ms = elapsed_ms(start);
  return result;
}

DimacsProcessBackend::DimacsProcessBackend(std::string solver_path)
    : solver_path_(std::move(solver_path)) {
  if (solver_path_.empty())
    throw InputError("external solver path is empty; set " + std::string(kSolverPathEnv) +
                     " or use dimacs:<path>");
}

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& stem) {
    auto tmpl = (std::filesystem::temp_directory_path() / (stem + ".XXXXXX")).string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    int fd = ::mkstemp(buf.data());
    if (fd < 0) throw EngineError("could not create a temporary DIMACS file");
    ::close(fd);
    path.assign(buf.data());
  }
  ~TempFile() { ::unlink(path.c_str()); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
};

}  // namespace

SolveResult DimacsProcessBackend::solve(const CnfInstance& cnf,
                                        std::chrono::microseconds budget) const {
  const auto start = std::chrono::steady_clock::now();

  TempFile tmp("dfadec");
  {
    std::ofstream out(tmp.path);
    write_dimacs(out, cnf);
    if (!out) throw EngineError("could not write DIMACS to " + tmp.path);
  }

  std::string cmd;
  if (budget.count() > 0) {
    // Rely on coreutils timeout(1); exit code 124 marks expiry.
    char secs[64];
    std::snprintf(secs, sizeof(secs), "%.6f", static_cast<double>(budget.count()) / 1e6);
    cmd = std::string("timeout ") + secs + " ";
  }
  cmd += "'" + solver_path_ + "' '" + tmp.path + "' 2>/dev/null";

  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw EngineError("could not start external solver: " + solver_path_);
  std::string output;
  std::array<char, 4096> chunk;
  std::size_t got;
  while ((got = ::fread(chunk.data(), 1, chunk.size(), pipe)) > 0)
    output.append(chunk.data(), got);
  int rc = ::pclose(pipe);
  int exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;

  SolveResult result;
  result.stats.wall_ms = elapsed_ms(start);

  if (exit_code == 124) {
    result.status = SolveStatus::Timeout;
    return result;
  }

  bool sat_line = false, unsat_line = false;
  std::vector<int> assigned;
  std::istringstream lines(output);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("s SATISFIABLE", 0) == 0) sat_line = true;
    else if (line.rfind("s UNSATISFIABLE", 0) == 0) unsat_line = true;
    else if (!line.empty() && line[0] == 'v') {
      std::istringstream vs(line.substr(1));
      int lit;
      while (vs >> lit)
        if (lit != 0) assigned.push_back(lit);
    }
  }

  if (unsat_line) {
    result.status = SolveStatus::Unsat;
    return result;
  }
  if (!sat_line)
    throw EngineError("external solver produced no verdict (exit code " +
                      std::to_string(exit_code) + ")");

  result.status = SolveStatus::Sat;
  result.model.assign(static_cast<std::size_t>(cnf.num_vars()) + 1, false);
  for (int lit : assigned) {
    auto v = static_cast<std::size_t>(std::abs(lit));
    if (v == 0 || v >= result.model.size())
      throw EngineError("external solver output references an unknown variable");
    result.model[v] = lit > 0;
  }
  if (!model_satisfies(cnf, result.model))
    throw EngineError("external solver returned a model that does not satisfy the instance");
  return result;
}

std::unique_ptr<SatBackend> make_backend(const std::string& name) {
  if (name.empty() || name == "internal") return std::make_unique<InternalBackend>();
  if (name == "dimacs") {
    const char* env = std::getenv(kSolverPathEnv);
    return std::make_unique<DimacsProcessBackend>(env ? env : "");
  }
  if (name.rfind("dimacs:", 0) == 0)
    return std::make_unique<DimacsProcessBackend>(name.substr(7));
  throw InputError("unknown backend '" + name + "' (expected internal or dimacs[:<path>])");
}

bool model_satisfies(const CnfInstance& cnf, const Model& model) {
  if (model.size() != static_cast<std::size_t>(cnf.num_vars()) + 1) return false;
  for (std::size_t c = 0; c < cnf.num_clauses(); ++c) {
    bool sat = false;
    for (Lit l : cnf.clause(c))
      if (model[static_cast<std::size_t>(std::abs(l))] == (l > 0)) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

void write_dimacs(std::ostream& out, const CnfInstance& cnf, const VarMap* vars) {
  if (vars) {
    for (int v = 1; v <= vars->num_vars(); ++v) {
      VarRef ref = vars->decode_var(v);
      out << "c " << family_letter(ref.family) << ' ' << ref.dfa;
      switch (ref.family) {
        case VarFamily::Color:       // c x k v i
        case VarFamily::SymEdge:     // c t k i j
          out << ' ' << ref.a << ' ' << ref.b;
          break;
        case VarFamily::SymParent:   // c p k j i
          out << ' ' << ref.a << ' ' << ref.b;
          break;
        case VarFamily::Transition:  // c y k l i j
        case VarFamily::SymMinSym:   // c m k l i j
          out << ' ' << ref.a << ' ' << ref.b << ' ' << ref.c;
          break;
        case VarFamily::Accepting:   // c z k i
        case VarFamily::Reject:      // c r k v
          out << ' ' << ref.a;
          break;
      }
      out << ' ' << v << '\n';
    }
  }
  out << "p cnf " << cnf.num_vars() << ' ' << cnf.num_clauses() << '\n';
  for (std::size_t c = 0; c < cnf.num_clauses(); ++c) {
    for (Lit l : cnf.clause(c)) out << l << ' ';
    out << "0\n";
  }
}

}  // namespace dfadec
