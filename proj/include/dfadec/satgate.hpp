#pragma once

#include <chrono>
#include <iosfwd>
#include <memory>
#include <string>

#include "dfadec/cnf.hpp"
#include "dfadec/encode.hpp"
#include "dfadec/varmap.hpp"

namespace dfadec {

enum class SolveStatus : std::uint8_t { Sat, Unsat, Timeout };

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  double wall_ms = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  Model model;  // total assignment when status == Sat
  SolveStats stats;
};

/// Abstraction over a CNF satisfiability engine. Each solve owns its
/// engine instance; implementations must be safe to call concurrently.
class SatBackend {
public:
  virtual ~SatBackend() = default;

  /// budget <= 0 means no limit. Engine failures throw EngineError and
  /// are never reported as Unsat.
  virtual SolveResult solve(const CnfInstance& cnf,
                            std::chrono::microseconds budget) const = 0;
};

/// Default backend: the in-process CDCL engine.
class InternalBackend final : public SatBackend {
public:
  SolveResult solve(const CnfInstance& cnf,
                    std::chrono::microseconds budget) const override;
};

/// Cross-checking backend: writes DIMACS to a temporary file and runs an
/// external solver binary that prints the usual "s ..."/"v ..." lines.
class DimacsProcessBackend final : public SatBackend {
public:
  explicit DimacsProcessBackend(std::string solver_path);

  SolveResult solve(const CnfInstance& cnf,
                    std::chrono::microseconds budget) const override;

private:
  std::string solver_path_;
};

/// Environment variable consulted for the external solver path.
inline constexpr const char* kSolverPathEnv = "DFADEC_DIMACS_SOLVER";

/// "internal", "dimacs" (path from DFADEC_DIMACS_SOLVER) or "dimacs:<path>".
std::unique_ptr<SatBackend> make_backend(const std::string& name);

/// Substitutes the model into every clause; independent of any engine.
bool model_satisfies(const CnfInstance& cnf, const Model& model);

/// DIMACS CNF v1. When `vars` is given, one comment line per variable maps
/// it back to the encoding: "c x <k> <v> <i> <var>", "c y <k> <l> <i> <j> <var>",
/// "c z <k> <i> <var>", "c r <k> <v> <var>", "c p <k> <j> <i> <var>",
/// "c t <k> <i> <j> <var>", "c m <k> <l> <i> <j> <var>".
void write_dimacs(std::ostream& out, const CnfInstance& cnf,
                  const VarMap* vars = nullptr);

}  // namespace dfadec
