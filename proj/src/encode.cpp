#include "dfadec/encode.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

#include "dfadec/errors.hpp"

namespace dfadec {

Encoding encode(const Apta& apta, const SizeTuple& sizes, const EncodeOptions& options) {
  VarMap vars(apta, sizes, options.symmetry_breaking);
  CnfInstance cnf(vars.num_vars());

  const auto n = static_cast<std::uint32_t>(sizes.size());
  const auto V = static_cast<std::uint32_t>(apta.num_nodes());
  const auto L = static_cast<std::uint32_t>(apta.alphabet().size());
  std::vector<Lit> buf;

  // Positive nodes: the node's color is an accepting state, in every member.
  for (std::uint32_t k = 0; k < n; ++k)
    for (Apta::NodeId v : apta.accepting_nodes())
      for (std::uint32_t i = 0; i < sizes[k]; ++i)
        cnf.add_clause({-vars.x(k, v, i), vars.z(k, i)}, ClauseGroup::AcceptAll);

  // Negative nodes: at least one member rejects. The formula is a
  // disjunction of per-member conjunctions, so each negative node gets a
  // selector variable per member: the selected member's color of the node
  // must be a rejecting (non-accepting) state.
  for (std::uint32_t idx = 0; idx < vars.negative_nodes().size(); ++idx) {
    buf.clear();
    for (std::uint32_t k = 0; k < n; ++k) buf.push_back(vars.reject(k, idx));
    cnf.add_clause(buf, ClauseGroup::RejectChoice);
  }
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t idx = 0; idx < vars.negative_nodes().size(); ++idx) {
      const auto v = static_cast<std::uint32_t>(vars.negative_nodes()[idx]);
      for (std::uint32_t i = 0; i < sizes[k]; ++i)
        cnf.add_clause({-vars.reject(k, idx), -vars.x(k, v, i), -vars.z(k, i)},
                       ClauseGroup::RejectImpl);
    }

  // Every node has at least one color per member.
  for (std::uint32_t v = 0; v < V; ++v)
    for (std::uint32_t k = 0; k < n; ++k) {
      buf.clear();
      for (std::uint32_t i = 0; i < sizes[k]; ++i) buf.push_back(vars.x(k, v, i));
      cnf.add_clause(buf, ClauseGroup::ColorAtLeastOne);
    }

  // Parent and child colors force the connecting transition.
  for (std::uint32_t v = 1; v < V; ++v) {
    const auto parent = static_cast<std::uint32_t>(apta.parent(v));
    const Symbol l = apta.in_symbol(v);
    for (std::uint32_t k = 0; k < n; ++k)
      for (std::uint32_t i = 0; i < sizes[k]; ++i)
        for (std::uint32_t j = 0; j < sizes[k]; ++j)
          cnf.add_clause({-vars.x(k, parent, i), -vars.x(k, v, j), vars.y(k, l, i, j)},
                         ClauseGroup::ParentTransition);
  }

  // Transitions target at most one state.
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t l = 0; l < L; ++l)
      for (std::uint32_t i = 0; i < sizes[k]; ++i)
        for (std::uint32_t j = 0; j < sizes[k]; ++j)
          for (std::uint32_t h = j + 1; h < sizes[k]; ++h)
            cnf.add_clause({-vars.y(k, l, i, j), -vars.y(k, l, i, h)},
                           ClauseGroup::TransAtMostOne);

  // At most one color per node per member (unordered pairs).
  for (std::uint32_t v = 0; v < V; ++v)
    for (std::uint32_t k = 0; k < n; ++k)
      for (std::uint32_t i = 0; i < sizes[k]; ++i)
        for (std::uint32_t j = i + 1; j < sizes[k]; ++j)
          cnf.add_clause({-vars.x(k, v, i), -vars.x(k, v, j)}, ClauseGroup::ColorAtMostOne);

  // Transitions target at least one state (total function).
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t l = 0; l < L; ++l)
      for (std::uint32_t i = 0; i < sizes[k]; ++i) {
        buf.clear();
        for (std::uint32_t j = 0; j < sizes[k]; ++j) buf.push_back(vars.y(k, l, i, j));
        cnf.add_clause(buf, ClauseGroup::TransAtLeastOne);
      }

  // Parent color plus transition force the child color.
  for (std::uint32_t v = 1; v < V; ++v) {
    const auto parent = static_cast<std::uint32_t>(apta.parent(v));
    const Symbol l = apta.in_symbol(v);
    for (std::uint32_t k = 0; k < n; ++k)
      for (std::uint32_t i = 0; i < sizes[k]; ++i)
        for (std::uint32_t j = 0; j < sizes[k]; ++j)
          cnf.add_clause({-vars.x(k, parent, i), -vars.y(k, l, i, j), vars.x(k, v, j)},
                         ClauseGroup::ChildColor);
  }

  // A rejecting-colored negative node cannot share its color with a
  // positive node in the same member.
  for (Apta::NodeId vm : apta.rejecting_nodes())
    for (Apta::NodeId vp : apta.accepting_nodes())
      for (std::uint32_t k = 0; k < n; ++k)
        for (std::uint32_t i = 0; i < sizes[k]; ++i)
          cnf.add_clause({-vars.x(k, vm, i), vars.z(k, i), -vars.x(k, vp, i)},
                         ClauseGroup::NoMerge);

  if (options.fix_root_color)
    for (std::uint32_t k = 0; k < n; ++k)
      cnf.add_clause({vars.x(k, 0, 0)}, ClauseGroup::RootColor);

  if (options.symmetry_breaking) {
    // DFS-order state enumeration, per member. p(j,i) means state j was
    // first discovered from state i; with DFS numbering that makes i the
    // largest state below j with an edge to j.
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::uint32_t m = sizes[k];

      for (std::uint32_t j = 1; j < m; ++j) {
        buf.clear();
        for (std::uint32_t i = 0; i < j; ++i) buf.push_back(vars.p(k, j, i));
        cnf.add_clause(buf, ClauseGroup::SymParentExists);
      }

      for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i + 1; j < m; ++j) {
          cnf.add_clause({-vars.p(k, j, i), vars.t(k, i, j)}, ClauseGroup::SymParentDef);
          for (std::uint32_t q = i + 1; q < j; ++q)
            cnf.add_clause({-vars.p(k, j, i), -vars.t(k, q, j)}, ClauseGroup::SymParentDef);
          buf.assign({vars.p(k, j, i), -vars.t(k, i, j)});
          for (std::uint32_t q = i + 1; q < j; ++q) buf.push_back(vars.t(k, q, j));
          cnf.add_clause(buf, ClauseGroup::SymParentDef);
        }

      for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i + 1; j < m; ++j) {
          buf.assign({-vars.t(k, i, j)});
          for (std::uint32_t l = 0; l < L; ++l) buf.push_back(vars.y(k, l, i, j));
          cnf.add_clause(buf, ClauseGroup::SymEdgeDef);
          for (std::uint32_t l = 0; l < L; ++l)
            cnf.add_clause({-vars.y(k, l, i, j), vars.t(k, i, j)}, ClauseGroup::SymEdgeDef);
        }

      // Nodes between a DFS parent and its child are fully explored, so
      // they cannot reach past the child.
      for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t q = i + 1; q < m; ++q)
          for (std::uint32_t j = q + 1; j < m; ++j)
            for (std::uint32_t h = j + 1; h < m; ++h)
              cnf.add_clause({-vars.p(k, j, i), -vars.t(k, q, h)}, ClauseGroup::SymDfsOrder);

      // m(l,i,j) <=> l is the smallest symbol labeling i -> j.
      for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i + 1; j < m; ++j)
          for (std::uint32_t l = 0; l < L; ++l) {
            cnf.add_clause({-vars.m(k, l, i, j), vars.y(k, l, i, j)},
                           ClauseGroup::SymMinSymDef);
            for (std::uint32_t s = 0; s < l; ++s)
              cnf.add_clause({-vars.m(k, l, i, j), -vars.y(k, s, i, j)},
                             ClauseGroup::SymMinSymDef);
            buf.assign({vars.m(k, l, i, j), -vars.y(k, l, i, j)});
            for (std::uint32_t s = 0; s < l; ++s) buf.push_back(vars.y(k, s, i, j));
            cnf.add_clause(buf, ClauseGroup::SymMinSymDef);
          }

      // Children of one parent are discovered in symbol order: the earlier
      // child's first symbol is smaller than the later child's.
      for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i + 1; j < m; ++j)
          for (std::uint32_t q = j + 1; q < m; ++q)
            for (std::uint32_t r = 0; r < L; ++r)
              for (std::uint32_t s = r + 1; s < L; ++s)
                cnf.add_clause({-vars.p(k, j, i), -vars.p(k, q, i), -vars.m(k, r, i, q),
                                -vars.m(k, s, i, j)},
                               ClauseGroup::SymChildOrder);
    }
  }

  return Encoding{std::move(cnf), std::move(vars)};
}

Decomposition decode(const Model& model, const VarMap& vars, const Alphabet& alphabet) {
  if (model.size() != static_cast<std::size_t>(vars.num_vars()) + 1)
    throw InputError("model does not assign every allocated variable");
  const std::uint32_t n = vars.num_dfas();
  const std::uint32_t L = vars.num_symbols();

  std::vector<Dfa> members;
  members.reserve(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const std::uint32_t m = vars.sizes()[k];

    State initial = m;
    for (std::uint32_t i = 0; i < m; ++i)
      if (model[vars.x(k, 0, i)]) {
        initial = i;
        break;
      }
    if (initial == m)
      throw std::logic_error("decode: root node has no color (color clauses violated)");

    std::vector<State> accepting;
    for (std::uint32_t i = 0; i < m; ++i)
      if (model[vars.z(k, i)]) accepting.push_back(i);

    std::vector<State> transitions(static_cast<std::size_t>(m) * L, m);
    for (std::uint32_t l = 0; l < L; ++l)
      for (std::uint32_t i = 0; i < m; ++i) {
        State target = m;
        for (std::uint32_t j = 0; j < m; ++j)
          if (model[vars.y(k, l, i, j)]) {
            target = j;
            break;
          }
        if (target == m)
          throw std::logic_error(
              "decode: transition has no target (total-function clause violated)");
        transitions[i * L + l] = target;
      }

    members.emplace_back(alphabet, m, initial, std::move(accepting), std::move(transitions));
  }
  return Decomposition(std::move(members));
}

}  // namespace dfadec
