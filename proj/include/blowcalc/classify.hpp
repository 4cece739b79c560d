#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "blowcalc/enumeration.hpp"
#include "blowcalc/graph.hpp"
#include "blowcalc/seq.hpp"
#include "blowcalc/skeleton.hpp"

namespace blowcalc {

/// Assignment of a weight word to every path of a skeleton, stored for one
/// orientation per pair: the one whose (head id, tail id) is lexicographically
/// smaller. Entries for reversals are implicit via the reversal law.
struct EdgeMapData {
  std::map<std::pair<VertexId, VertexId>, IntSeq> entries;

  /// Word of the oriented path (u, v); reverses a stored entry if needed.
  const IntSeq& stored(VertexId u, VertexId v) const;
  IntSeq at(VertexId u, VertexId v) const;
};

/// The edge map of a skeletal map onto a pseudo-minimal forest.
EdgeMapData edge_map(const SkeletalMap& sk);

/// The determinant-zero contact graph on the branch vertices of S, with its
/// special vertices.
struct SharpGraph {
  std::set<VertexId> vertices;
  std::set<std::pair<VertexId, VertexId>> edges;
  std::set<VertexId> special;

  /// Components without special vertices, ordered by smallest vertex id.
  std::vector<std::set<VertexId>> nonspecial_components() const;
};

SharpGraph sharp_graph(const WeightedGraph& s, const EdgeMapData& w);

/// Weights of the skeletal images of the branch vertices.
std::map<VertexId, Weight> branch_weight_vector(const SkeletalMap& sk);

/// Branch-weight sums over the non-special sharp components (the image of the
/// weight vector in N(S, omega)).
struct EtaVector {
  std::vector<std::pair<VertexId, Int>> values;  // keyed by component min id

  bool operator==(const EtaVector& o) const { return values == o.values; }
};

EtaVector eta_of(const SkeletalMap& sk);

/// Entrywise canonical form on the stored orientations.
EdgeMapData canonical_edge_map(const EdgeMapData& w);

/// The correction sum between equivalent edge maps over one non-special
/// component; always an integer.
Int delta_c(const EdgeMapData& w, const EdgeMapData& w_prime,
            const std::set<VertexId>& component);

/// Complete equivalence invariant of a weighted forest: skeleton code plus
/// the lexicographically minimal (canonical edge map, eta) over Aut(S).
struct ClassFingerprint {
  std::string bytes;

  bool operator==(const ClassFingerprint& o) const { return bytes == o.bytes; }
  bool operator!=(const ClassFingerprint& o) const { return !(*this == o); }
  std::string text() const;  // "FP1:" + hex
};

ClassFingerprint fingerprint(const WeightedGraph& g, std::size_t aut_cap = 1000000);

bool forests_equivalent(const WeightedGraph& g, const WeightedGraph& h);

/// Replace the open path by one realizing y (caps included per the path
/// type), leaving the rest of the graph unchanged. Pre: y is tau-equivalent
/// to the capped weight word of the path.
WeightedGraph transplant(const WeightedGraph& g, const GPath& p, const IntSeq& y);

/// An equivalent forest whose path words are all canonical sequences.
WeightedGraph canonical_forest(const WeightedGraph& g);

struct ModelSet {
  std::vector<WeightedGraph> models;  // deduplicated, sorted by canonical code
  bool complete = false;
};

/// Minimal forests equivalent to g, from tuples of per-path minimal
/// sequences with branch weights corrected by the delta shifts.
ModelSet minimal_models(const WeightedGraph& g, const EnumBounds& bounds);

}  // namespace blowcalc
