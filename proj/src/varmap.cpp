#include "dfadec/varmap.hpp"

#include <cassert>

#include "dfadec/errors.hpp"

namespace dfadec {

const char* family_letter(VarFamily f) {
  switch (f) {
    case VarFamily::Color: return "x";
    case VarFamily::Transition: return "y";
    case VarFamily::Accepting: return "z";
    case VarFamily::Reject: return "r";
    case VarFamily::SymParent: return "p";
    case VarFamily::SymEdge: return "t";
    case VarFamily::SymMinSym: return "m";
  }
  return "?";
}

VarMap::VarMap(const Apta& apta, SizeTuple sizes, bool with_symmetry)
    : sizes_(std::move(sizes)),
      num_nodes_(static_cast<std::uint32_t>(apta.num_nodes())),
      num_symbols_(static_cast<std::uint32_t>(apta.alphabet().size())),
      with_symmetry_(with_symmetry),
      negative_nodes_(apta.rejecting_nodes()) {
  if (sizes_.empty()) throw InputError("size tuple must be non-empty");
  for (std::size_t k = 0; k < sizes_.size(); ++k) {
    if (sizes_[k] == 0) throw InputError("member sizes must be at least 1");
    if (k > 0 && sizes_[k - 1] > sizes_[k])
      throw InputError("member sizes must be non-decreasing");
  }
  const auto n = static_cast<std::uint32_t>(sizes_.size());
  const std::uint32_t V = num_nodes_;
  const std::uint32_t L = num_symbols_;

  info_.push_back({});  // variable ids are 1-based
  std::uint32_t next = 1;
  auto alloc = [&](VarFamily f, std::uint32_t k, std::uint32_t a, std::uint32_t b,
                   std::uint32_t c) {
    info_.push_back({f, k, a, b, c});
    return next++;
  };

  x_base_.resize(n);
  z_base_.resize(n);
  y_base_.resize(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const std::uint32_t m = sizes_[k];
    x_base_[k] = next;
    for (std::uint32_t v = 0; v < V; ++v)
      for (std::uint32_t i = 0; i < m; ++i) alloc(VarFamily::Color, k, v, i, 0);
    z_base_[k] = next;
    for (std::uint32_t i = 0; i < m; ++i) alloc(VarFamily::Accepting, k, i, 0, 0);
    y_base_[k] = next;
    for (std::uint32_t l = 0; l < L; ++l)
      for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j) alloc(VarFamily::Transition, k, l, i, j);
  }

  r_base_ = next;
  for (std::uint32_t idx = 0; idx < negative_nodes_.size(); ++idx)
    for (std::uint32_t k = 0; k < n; ++k)
      alloc(VarFamily::Reject, k, static_cast<std::uint32_t>(negative_nodes_[idx]), 0, 0);

  if (with_symmetry_) {
    t_base_.resize(n);
    p_base_.resize(n);
    m_base_.resize(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::uint32_t m = sizes_[k];
      t_base_[k] = next;
      for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i + 1; j < m; ++j) alloc(VarFamily::SymEdge, k, i, j, 0);
      p_base_[k] = next;
      for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = i + 1; j < m; ++j) alloc(VarFamily::SymParent, k, j, i, 0);
      m_base_[k] = next;
      for (std::uint32_t l = 0; l < L; ++l)
        for (std::uint32_t i = 0; i < m; ++i)
          for (std::uint32_t j = i + 1; j < m; ++j)
            alloc(VarFamily::SymMinSym, k, l, i, j);
    }
  }
}

std::uint32_t VarMap::pair_index(std::uint32_t k, std::uint32_t i, std::uint32_t j) const {
  assert(i < j && j < sizes_[k]);
  const std::uint32_t m = sizes_[k];
  // Upper-triangle index of (i, j) in row-major order.
  return i * m - i * (i + 1) / 2 + (j - i - 1);
}

Lit VarMap::x(std::uint32_t k, std::uint32_t v, std::uint32_t i) const {
  return static_cast<Lit>(x_base_[k] + v * sizes_[k] + i);
}

Lit VarMap::y(std::uint32_t k, std::uint32_t l, std::uint32_t i, std::uint32_t j) const {
  const std::uint32_t m = sizes_[k];
  return static_cast<Lit>(y_base_[k] + (l * m + i) * m + j);
}

Lit VarMap::z(std::uint32_t k, std::uint32_t i) const {
  return static_cast<Lit>(z_base_[k] + i);
}

Lit VarMap::reject(std::uint32_t k, std::uint32_t neg_index) const {
  return static_cast<Lit>(r_base_ + neg_index * num_dfas() + k);
}

Lit VarMap::p(std::uint32_t k, std::uint32_t j, std::uint32_t i) const {
  return static_cast<Lit>(p_base_[k] + pair_index(k, i, j));
}

Lit VarMap::t(std::uint32_t k, std::uint32_t i, std::uint32_t j) const {
  return static_cast<Lit>(t_base_[k] + pair_index(k, i, j));
}

Lit VarMap::m(std::uint32_t k, std::uint32_t l, std::uint32_t i, std::uint32_t j) const {
  const std::uint32_t m = sizes_[k];
  const std::uint32_t pairs = m * (m - 1) / 2;
  return static_cast<Lit>(m_base_[k] + l * pairs + pair_index(k, i, j));
}

VarRef VarMap::decode_var(int var) const {
  if (var < 1 || var > num_vars()) throw InputError("variable out of range");
  return info_[static_cast<std::size_t>(var)];
}

}  // namespace dfadec
