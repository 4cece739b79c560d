#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "blowcalc/numeric.hpp"

namespace blowcalc {

using VertexId = std::int64_t;
using Edge = std::pair<VertexId, VertexId>;  // normalized: first < second

inline Edge make_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

enum class BlowKind { AtVertex, AtEdge, Free };

/// Record of a single blowing-up. `created` is the new weight -1 vertex;
/// `at_u`/`at_v` are the site (vertex, or edge endpoints) in the source graph.
struct BlowRecord {
  BlowKind kind;
  VertexId created;
  VertexId at_u = -1;
  VertexId at_v = -1;
};

/// Finite simple undirected graph with integer vertex weights.
///
/// Values are immutable once built by the calculus operations below: every
/// operation returns a fresh graph. Fresh vertex ids are allocated
/// monotonically and never reused within one value's history, so blow-up
/// records stay replayable.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  VertexId add_vertex(Weight w);
  void add_vertex_with_id(VertexId v, Weight w);
  void add_edge(VertexId a, VertexId b);
  void remove_vertex(VertexId v);  // drops incident edges
  void remove_edge(VertexId a, VertexId b);
  void set_weight(VertexId v, Weight w);

  bool has_vertex(VertexId v) const { return weights_.count(v) != 0; }
  bool has_edge(VertexId a, VertexId b) const { return edges_.count(make_edge(a, b)) != 0; }
  Weight weight(VertexId v) const;
  std::size_t degree(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;  // ascending
  std::vector<VertexId> vertex_ids() const;           // ascending
  const std::map<VertexId, Weight>& vertices() const { return weights_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  bool operator==(const WeightedGraph& o) const {
    return weights_ == o.weights_ && edges_ == o.edges_;
  }

 private:
  std::map<VertexId, Weight> weights_;
  std::map<VertexId, std::set<VertexId>> adj_;
  std::set<Edge> edges_;
  VertexId next_id_ = 0;

  void require_vertex(VertexId v) const;
};

// The three blowing-up operations and their inverse.
std::pair<WeightedGraph, BlowRecord> blow_up_vertex(const WeightedGraph& g, VertexId v);
std::pair<WeightedGraph, BlowRecord> blow_up_edge(const WeightedGraph& g, VertexId u, VertexId v);
std::pair<WeightedGraph, BlowRecord> blow_up_free(const WeightedGraph& g);

/// Vertices of weight -1 and degree <= 2 whose neighbors are non-adjacent.
std::set<VertexId> contractible_vertices(const WeightedGraph& g);

WeightedGraph blow_down(const WeightedGraph& g, VertexId e);

/// True when the recorded blow-up was subdivisional or at a vertex of
/// degree <= 1 in the source graph. Free blow-ups are never strict.
bool is_strict(const WeightedGraph& g, const BlowRecord& r);

/// Blow down repeatedly (smallest contractible id first) until minimal.
WeightedGraph minimalize(const WeightedGraph& g);

bool is_forest(const WeightedGraph& g);

/// Connected components ordered by smallest vertex id.
std::vector<WeightedGraph> components(const WeightedGraph& g);

/// Isomorphism-invariant encoding of a weighted forest: rooted-tree canonical
/// codes at each tree's center, children sorted, components sorted. Equal
/// codes iff the weighted forests are isomorphic. With use_weights = false the
/// weights are ignored (the form used for skeletons).
std::string canonical_code(const WeightedGraph& g, bool use_weights = true);

/// Canonical relabeling: result[i] is the original vertex receiving label i.
/// Two isomorphic forests relabel to identical graphs (up to automorphism).
std::vector<VertexId> canonical_labeling(const WeightedGraph& g, bool use_weights = true);

using VertexMap = std::map<VertexId, VertexId>;

/// Complete list of (weight-preserving, unless use_weights = false) graph
/// automorphisms of a forest. Throws when the group exceeds `cap`.
std::vector<VertexMap> automorphisms(const WeightedGraph& g, bool use_weights = true,
                                     std::size_t cap = 1000000);

/// The linear chain [x1, ..., xq] as a graph (fresh ids 0..q-1).
WeightedGraph chain_graph(const std::vector<Weight>& terms);

WeightedGraph relabel(const WeightedGraph& g, const VertexMap& map);

}  // namespace blowcalc
