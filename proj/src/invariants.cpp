#include "blowcalc/invariants.hpp"

#include <algorithm>

namespace blowcalc {

IntersectionMatrix intersection_matrix(const WeightedGraph& g) {
  IntersectionMatrix out;
  out.basis = g.vertex_ids();
  out.order = out.basis.size();
  out.m.assign(out.order, std::vector<Int>(out.order, 0));
  for (std::size_t i = 0; i < out.order; ++i) {
    out.m[i][i] = g.weight(out.basis[i]);
    for (std::size_t j = i + 1; j < out.order; ++j)
      if (g.has_edge(out.basis[i], out.basis[j])) out.m[i][j] = out.m[j][i] = 1;
  }
  return out;
}

Int det_int_matrix(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

Int det_graph(const WeightedGraph& g) {
  IntersectionMatrix im = intersection_matrix(g);
  for (auto& row : im.m)
    for (Int& x : row) x = -x;
  return det_int_matrix(std::move(im.m));
}

unsigned hodge_graph(const WeightedGraph& g) {
  IntersectionMatrix im = intersection_matrix(g);
  const std::size_t n = im.order;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(im.m[i][j]);

  auto add_row_col = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < n; ++t) m[i][t] += m[j][t];
    for (std::size_t t = 0; t < n; ++t) m[t][i] += m[t][j];
  };
  auto swap_row_col = [&](std::size_t i, std::size_t j) {
    std::swap(m[i], m[j]);
    for (std::size_t t = 0; t < n; ++t) std::swap(m[t][i], m[t][j]);
  };

  unsigned nonneg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] == 0) {
      std::size_t j = i + 1;
      while (j < n && m[i][j] == 0) ++j;
      if (j == n) {
        ++nonneg;  // zero diagonal entry
        continue;
      }
      // Zero pivot with nonzero off-diagonal: either bring in a nonzero
      // diagonal partner, or add the (zero-diagonal) partner row/column,
      // which leaves 2*m[i][j] != 0 on the pivot.
      if (m[j][j] != 0)
        swap_row_col(i, j);
      else
        add_row_col(i, j);
    }
    Rat pivot = m[i][i];
    for (std::size_t k = i + 1; k < n; ++k) {
      if (m[k][i] == 0) continue;
      Rat f = m[k][i] / pivot;
      for (std::size_t t = 0; t < n; ++t) m[k][t] -= f * m[i][t];
      for (std::size_t t = 0; t < n; ++t) m[t][k] -= f * m[t][i];
    }
    if (pivot > 0) ++nonneg;
  }
  return nonneg;
}

}  // namespace blowcalc
