#pragma once

#include <cstdint>
#include <vector>

#include "dfadec/cnf.hpp"
#include "dfadec/dfa.hpp"
#include "dfadec/sample.hpp"

namespace dfadec {

/// Variable families of the encoding. The letters match the DIMACS
/// comment output: x color, y transition, z accepting, r negative-example
/// rejection selector, and p/t/m for the DFS-order symmetry predicates.
enum class VarFamily : std::uint8_t {
  Color,       // x[k][v][i]: node v has color i in member k
  Transition,  // y[k][l][i][j]: member k maps state i to j on symbol l
  Accepting,   // z[k][i]: state i of member k accepts
  Reject,      // r[k][v]: member k is the one rejecting negative node v
  SymParent,   // p[k][j][i], i<j: DFS parent of state j is state i
  SymEdge,     // t[k][i][j], i<j: some transition i -> j exists
  SymMinSym,   // m[k][l][i][j], i<j: l is the smallest symbol on i -> j
};

const char* family_letter(VarFamily f);

struct VarRef {
  VarFamily family;
  std::uint32_t dfa = 0;
  std::uint32_t a = 0, b = 0, c = 0;  // meaning depends on family
};

/// Dense, injective allocation of encoding variables with inverse lookup.
/// Built once per (APTA, size tuple) and immutable afterwards.
class VarMap {
public:
  VarMap(const Apta& apta, SizeTuple sizes, bool with_symmetry);

  int num_vars() const { return static_cast<int>(info_.size()) - 1; }
  bool has_symmetry_vars() const { return with_symmetry_; }

  std::uint32_t num_dfas() const { return static_cast<std::uint32_t>(sizes_.size()); }
  const SizeTuple& sizes() const { return sizes_; }
  std::uint32_t num_nodes() const { return num_nodes_; }
  std::uint32_t num_symbols() const { return num_symbols_; }

  /// Rejecting APTA nodes, in the order used by the r family's index.
  const std::vector<Apta::NodeId>& negative_nodes() const { return negative_nodes_; }

  Lit x(std::uint32_t k, std::uint32_t v, std::uint32_t i) const;
  Lit y(std::uint32_t k, std::uint32_t l, std::uint32_t i, std::uint32_t j) const;
  Lit z(std::uint32_t k, std::uint32_t i) const;
  Lit reject(std::uint32_t k, std::uint32_t neg_index) const;
  Lit p(std::uint32_t k, std::uint32_t j, std::uint32_t i) const;  // i < j
  Lit t(std::uint32_t k, std::uint32_t i, std::uint32_t j) const;  // i < j
  Lit m(std::uint32_t k, std::uint32_t l, std::uint32_t i, std::uint32_t j) const;  // i < j

  VarRef decode_var(int var) const;

private:
  std::uint32_t pair_index(std::uint32_t k, std::uint32_t i, std::uint32_t j) const;

  SizeTuple sizes_;
  std::uint32_t num_nodes_ = 0;
  std::uint32_t num_symbols_ = 0;
  bool with_symmetry_ = false;
  std::vector<Apta::NodeId> negative_nodes_;

  std::vector<std::uint32_t> x_base_, y_base_, z_base_;
  std::uint32_t r_base_ = 0;
  std::vector<std::uint32_t> p_base_, t_base_, m_base_;
  std::vector<VarRef> info_;  // 1-based; info_[0] unused
};

}  // namespace dfadec
