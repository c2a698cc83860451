#pragma once

#include <vector>

#include "dfadec/cnf.hpp"
#include "dfadec/dfa.hpp"
#include "dfadec/sample.hpp"
#include "dfadec/varmap.hpp"

namespace dfadec {

/// Total assignment, indexed by variable; model[0] is unused.
using Model = std::vector<bool>;

struct EncodeOptions {
  bool symmetry_breaking = true;
  /// Pin the root node to color 0 in every member.
  bool fix_root_color = true;
};

struct Encoding {
  CnfInstance cnf;
  VarMap vars;
};

/// Reduce "does a consistent decomposition with these member sizes exist?"
/// to CNF. The instance is satisfiable iff such a decomposition exists;
/// symmetry clauses only prune isomorphic assignments.
Encoding encode(const Apta& apta, const SizeTuple& sizes,
                const EncodeOptions& options = {});

/// Read a decomposition back out of a satisfying assignment.
Decomposition decode(const Model& model, const VarMap& vars,
                     const Alphabet& alphabet);

}  // namespace dfadec
