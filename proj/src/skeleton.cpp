#include "blowcalc/skeleton.hpp"

#include <algorithm>
#include <stdexcept>

namespace blowcalc {

namespace {

void require_forest(const WeightedGraph& g, const char* who) {
  if (!is_forest(g)) throw std::invalid_argument(std::string(who) + ": not a forest");
}

}  // namespace

std::vector<GPath> paths(const WeightedGraph& g) {
  require_forest(g, "paths");
  std::vector<GPath> out;
  for (VertexId v : g.vertex_ids()) {
    std::size_t d = g.degree(v);
    if (d == 2) continue;
    if (d == 0) {
      out.push_back(GPath{{v}});
      continue;
    }
    for (VertexId u : g.neighbors(v)) {
      GPath p{{v, u}};
      while (g.degree(p.vertices.back()) == 2) {
        auto nb = g.neighbors(p.vertices.back());
        VertexId prev = p.vertices[p.vertices.size() - 2];
        p.vertices.push_back(nb[0] == prev ? nb[1] : nb[0]);
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

bool is_path(const WeightedGraph& g, const GPath& p) {
  const auto& v = p.vertices;
  if (v.empty()) return false;
  for (VertexId x : v)
    if (!g.has_vertex(x)) return false;
  if (v.size() == 1) return g.degree(v[0]) == 0;
  std::set<VertexId> distinct(v.begin(), v.end());
  if (distinct.size() != v.size()) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (!g.has_edge(v[i], v[i + 1])) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool endpoint = (i == 0 || i + 1 == v.size());
    if ((g.degree(v[i]) != 2) != endpoint) return false;
  }
  return true;
}

PathType path_type(const WeightedGraph& g, const GPath& p) {
  if (!is_path(g, p)) throw std::invalid_argument("path_type: not an element of P(g)");
  bool head_plus = g.degree(p.vertices.front()) > 2;
  bool tail_plus = g.degree(p.vertices.back()) > 2;
  if (head_plus && tail_plus) return PathType::PlusPlus;
  if (head_plus) return PathType::PlusMinus;
  if (tail_plus) return PathType::MinusPlus;
  return PathType::MinusMinus;
}

IntSeq w_gamma(const WeightedGraph& g, const GPath& p) {
  if (!is_path(g, p)) throw std::invalid_argument("w_gamma: not an element of P(g)");
  IntSeq out;
  for (VertexId v : p.vertices)
    if (g.degree(v) < 3) out.push_back(g.weight(v));
  return out;
}

SkeletalMap skeleton_of(const WeightedGraph& g) {
  require_forest(g, "skeleton_of");
  SkeletalMap sk;
  sk.target = g;
  VertexId fresh = -1;
  for (VertexId v : g.vertex_ids()) {
    fresh = std::max(fresh, v);
    if (g.degree(v) != 2) sk.skeleton.add_vertex_with_id(v, 0);
  }
  ++fresh;
  for (VertexId v : g.vertex_ids()) {
    if (g.degree(v) != 2) sk.vmap[v] = v;
  }
  // edges: suppress the degree-2 interiors
  for (const GPath& p : paths(g)) {
    if (p.vertices.size() == 1) continue;
    if (p.vertices.front() < p.vertices.back())
      sk.skeleton.add_edge(p.vertices.front(), p.vertices.back());
  }
  // pendant partner for each isolated vertex
  for (VertexId v : g.vertex_ids()) {
    if (g.degree(v) != 0) continue;
    VertexId star = fresh++;
    sk.skeleton.add_vertex_with_id(star, 0);
    sk.skeleton.add_edge(v, star);
    sk.vmap[star] = v;
  }
  return sk;
}

GPath skeletal_path(const SkeletalMap& sk, VertexId a, VertexId b) {
  if (!sk.skeleton.has_edge(a, b))
    throw std::invalid_argument("skeletal_path: not a skeleton edge");
  VertexId s = sk.vmap.at(a), t = sk.vmap.at(b);
  if (s == t) return GPath{{s}};  // isolated vertex, both partners map onto it
  // unique path between s and t in the forest
  std::map<VertexId, VertexId> parent;
  std::vector<VertexId> stack{s};
  parent[s] = s;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (v == t) break;
    for (VertexId u : sk.target.neighbors(v))
      if (!parent.count(u)) {
        parent[u] = v;
        stack.push_back(u);
      }
  }
  if (!parent.count(t)) throw std::logic_error("skeletal_path: endpoints disconnected");
  GPath p;
  for (VertexId v = t;; v = parent[v]) {
    p.vertices.push_back(v);
    if (v == s) break;
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

bool is_pseudo_minimal(const WeightedGraph& g) {
  require_forest(g, "is_pseudo_minimal");
  for (const GPath& p : paths(g)) {
    if (path_type(g, p) == PathType::PlusPlus) continue;
    CanonicalSeq c = canonical_form(w_gamma(g, p));
    if (c.r == 0 && c.tail.empty()) return false;
  }
  return true;
}

}  // namespace blowcalc
