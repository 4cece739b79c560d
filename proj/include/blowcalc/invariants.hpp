#pragma once

#include <vector>

#include "blowcalc/graph.hpp"
#include "blowcalc/numeric.hpp"

namespace blowcalc {

/// Symmetric matrix of the intersection form: weights on the diagonal,
/// adjacency (0/1) off it. Row order follows sorted vertex ids.
struct IntersectionMatrix {
  std::size_t order = 0;
  std::vector<std::vector<Int>> m;
  std::vector<VertexId> basis;
};

IntersectionMatrix intersection_matrix(const WeightedGraph& g);

/// det(-M), computed by fraction-free (Bareiss) elimination; det of the
/// empty graph is 1.
Int det_graph(const WeightedGraph& g);

/// The Hodge number: n+ + n0 of the intersection form, by exact symmetric
/// congruence diagonalization over the rationals.
unsigned hodge_graph(const WeightedGraph& g);

/// Exact determinant of an arbitrary square Int matrix (helper shared with
/// tests).
Int det_int_matrix(std::vector<std::vector<Int>> m);

}  // namespace blowcalc
