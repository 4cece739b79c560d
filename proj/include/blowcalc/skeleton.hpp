#pragma once

#include <map>
#include <vector>

#include "blowcalc/graph.hpp"
#include "blowcalc/seq.hpp"

namespace blowcalc {

/// Element of P(G): a single degree-0 vertex, or a walk between two
/// degree-!=2 endpoints whose interior vertices all have degree 2.
struct GPath {
  std::vector<VertexId> vertices;

  GPath rev() const { return GPath{std::vector<VertexId>(vertices.rbegin(), vertices.rend())}; }
  bool operator==(const GPath& o) const { return vertices == o.vertices; }
  bool operator<(const GPath& o) const { return vertices < o.vertices; }
};

/// All elements of P(g) (each non-singleton path together with its reversal),
/// in deterministic order.
std::vector<GPath> paths(const WeightedGraph& g);

/// Membership test for P(g).
bool is_path(const WeightedGraph& g, const GPath& p);

PathType path_type(const WeightedGraph& g, const GPath& p);

/// The weight word W_G(gamma): weights of the degree-<3 vertices along the
/// path, in order.
IntSeq w_gamma(const WeightedGraph& g, const GPath& p);

/// A skeleton S (weights all zero, no degree-0/2 vertices) together with the
/// vertex map realizing a skeletal map S -> target.
struct SkeletalMap {
  WeightedGraph skeleton;
  WeightedGraph target;
  std::map<VertexId, VertexId> vmap;  // Vtx(S) -> Vtx(target)
};

/// The skeleton of a forest with its skeletal map: degree-2 vertices
/// suppressed, each degree-0 vertex paired with a fresh pendant partner.
SkeletalMap skeleton_of(const WeightedGraph& g);

/// The path of the target realizing the skeleton path (a, b).
GPath skeletal_path(const SkeletalMap& sk, VertexId a, VertexId b);

/// True when every path whose weight word is equivalent to the empty
/// sequence has type (+,+).
bool is_pseudo_minimal(const WeightedGraph& g);

}  // namespace blowcalc
