#pragma once

#include <random>

#include "blowcalc/graph.hpp"

namespace blowcalc::fixtures {

inline WeightedGraph random_forest(std::mt19937_64& rng, std::size_t max_vertices, Weight w_min,
                                   Weight w_max) {
  std::uniform_int_distribution<std::size_t> size_dist(0, max_vertices);
  std::uniform_int_distribution<Weight> weight_dist(w_min, w_max);
  std::size_t n = size_dist(rng);
  WeightedGraph g;
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < n; ++i) {
    VertexId v = g.add_vertex(weight_dist(rng));
    if (!ids.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, ids.size());
      std::size_t j = pick(rng);
      if (j < ids.size()) g.add_edge(ids[j], v);
    }
    ids.push_back(v);
  }
  return g;
}

inline WeightedGraph random_blow_up(std::mt19937_64& rng, const WeightedGraph& g) {
  auto ids = g.vertex_ids();
  const auto& edges = g.edges();
  std::uniform_int_distribution<int> kind(0, 2);
  for (;;) {
    switch (kind(rng)) {
      case 0:
        if (ids.empty()) break;
        return blow_up_vertex(g, ids[rng() % ids.size()]).first;
      case 1: {
        if (edges.empty()) break;
        auto it = edges.begin();
        std::advance(it, rng() % edges.size());
        return blow_up_edge(g, it->first, it->second).first;
      }
      default:
        return blow_up_free(g).first;
    }
  }
}

/// Tree with two degree-3 vertices joined by an interior chain, and two
/// pendant leaves on each: spine end weights -5 / -8, interior `spine`,
/// leaves (-2, -2) and (-3, -3).
inline WeightedGraph two_branch_tree(const std::vector<Weight>& spine, Weight left = -5,
                                     Weight right = -8) {
  WeightedGraph g;
  VertexId a = g.add_vertex(left);
  VertexId prev = a;
  for (Weight t : spine) {
    VertexId v = g.add_vertex(t);
    g.add_edge(prev, v);
    prev = v;
  }
  VertexId b = g.add_vertex(right);
  g.add_edge(prev, b);
  g.add_edge(a, g.add_vertex(-2));
  g.add_edge(a, g.add_vertex(-2));
  g.add_edge(b, g.add_vertex(-3));
  g.add_edge(b, g.add_vertex(-3));
  return g;
}

/// The 13-vertex caterpillar: spine
/// -3, a, 0, 0, b, 0, 0, -3, c, -5 with pendants -3 / -4 / -5 below the
/// vertices weighted a / b / c.
inline WeightedGraph caterpillar_13(Weight a, Weight b, Weight c) {
  WeightedGraph g;
  std::vector<Weight> spine{-3, a, 0, 0, b, 0, 0, -3, c, -5};
  std::vector<VertexId> ids;
  for (Weight t : spine) {
    VertexId v = g.add_vertex(t);
    if (!ids.empty()) g.add_edge(ids.back(), v);
    ids.push_back(v);
  }
  g.add_edge(ids[1], g.add_vertex(-3));
  g.add_edge(ids[4], g.add_vertex(-4));
  g.add_edge(ids[8], g.add_vertex(-5));
  return g;
}

}  // namespace blowcalc::fixtures
