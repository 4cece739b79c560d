#include "blowcalc/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace blowcalc {

void WeightedGraph::require_vertex(VertexId v) const {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex id " + std::to_string(v));
}

VertexId WeightedGraph::add_vertex(Weight w) {
  VertexId v = next_id_++;
  add_vertex_with_id(v, w);
  return v;
}

void WeightedGraph::add_vertex_with_id(VertexId v, Weight w) {
  if (has_vertex(v)) throw std::invalid_argument("duplicate vertex id " + std::to_string(v));
  weights_[v] = checked_weight(w);
  adj_[v];
  if (v >= next_id_) next_id_ = v + 1;
}

void WeightedGraph::add_edge(VertexId a, VertexId b) {
  require_vertex(a);
  require_vertex(b);
  if (a == b) throw std::invalid_argument("no edge may join a vertex to itself");
  edges_.insert(make_edge(a, b));
  adj_[a].insert(b);
  adj_[b].insert(a);
}

void WeightedGraph::remove_vertex(VertexId v) {
  require_vertex(v);
  for (VertexId u : adj_[v]) {
    adj_[u].erase(v);
    edges_.erase(make_edge(u, v));
  }
  adj_.erase(v);
  weights_.erase(v);
}

void WeightedGraph::remove_edge(VertexId a, VertexId b) {
  if (!has_edge(a, b)) throw std::invalid_argument("no such edge");
  edges_.erase(make_edge(a, b));
  adj_[a].erase(b);
  adj_[b].erase(a);
}

void WeightedGraph::set_weight(VertexId v, Weight w) {
  require_vertex(v);
  weights_[v] = checked_weight(w);
}

Weight WeightedGraph::weight(VertexId v) const {
  require_vertex(v);
  return weights_.at(v);
}

std::size_t WeightedGraph::degree(VertexId v) const {
  require_vertex(v);
  return adj_.at(v).size();
}

std::vector<VertexId> WeightedGraph::neighbors(VertexId v) const {
  require_vertex(v);
  const auto& s = adj_.at(v);
  return {s.begin(), s.end()};
}

std::vector<VertexId> WeightedGraph::vertex_ids() const {
  std::vector<VertexId> out;
  out.reserve(weights_.size());
  for (const auto& [v, w] : weights_) out.push_back(v);
  return out;
}

std::pair<WeightedGraph, BlowRecord> blow_up_vertex(const WeightedGraph& g, VertexId v) {
  WeightedGraph out = g;
  out.set_weight(v, wsub(g.weight(v), 1));
  VertexId e = out.add_vertex(-1);
  out.add_edge(e, v);
  return {out, BlowRecord{BlowKind::AtVertex, e, v, -1}};
}

std::pair<WeightedGraph, BlowRecord> blow_up_edge(const WeightedGraph& g, VertexId u, VertexId v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("blow_up_edge: not an edge");
  WeightedGraph out = g;
  out.remove_edge(u, v);
  out.set_weight(u, wsub(g.weight(u), 1));
  out.set_weight(v, wsub(g.weight(v), 1));
  VertexId e = out.add_vertex(-1);
  out.add_edge(u, e);
  out.add_edge(e, v);
  auto [a, b] = make_edge(u, v);
  return {out, BlowRecord{BlowKind::AtEdge, e, a, b}};
}

std::pair<WeightedGraph, BlowRecord> blow_up_free(const WeightedGraph& g) {
  WeightedGraph out = g;
  VertexId e = out.add_vertex(-1);
  return {out, BlowRecord{BlowKind::Free, e, -1, -1}};
}

std::set<VertexId> contractible_vertices(const WeightedGraph& g) {
  std::set<VertexId> out;
  for (const auto& [v, w] : g.vertices()) {
    if (w != -1) continue;
    auto nb = g.neighbors(v);
    if (nb.size() > 2) continue;
    if (nb.size() == 2 && g.has_edge(nb[0], nb[1])) continue;
    out.insert(v);
  }
  return out;
}

WeightedGraph blow_down(const WeightedGraph& g, VertexId e) {
  if (!contractible_vertices(g).count(e))
    throw std::invalid_argument("blow_down: vertex is not contractible");
  WeightedGraph out = g;
  auto nb = g.neighbors(e);
  out.remove_vertex(e);
  for (VertexId u : nb) out.set_weight(u, wadd(g.weight(u), 1));
  if (nb.size() == 2) out.add_edge(nb[0], nb[1]);
  return out;
}

bool is_strict(const WeightedGraph& g, const BlowRecord& r) {
  switch (r.kind) {
    case BlowKind::AtEdge:
      return true;
    case BlowKind::AtVertex:
      return g.degree(r.at_u) <= 1;
    case BlowKind::Free:
      return false;
  }
  return false;
}

WeightedGraph minimalize(const WeightedGraph& g) {
  WeightedGraph cur = g;
  for (;;) {
    auto c = contractible_vertices(cur);
    if (c.empty()) return cur;
    cur = blow_down(cur, *c.begin());
  }
}

bool is_forest(const WeightedGraph& g) {
  // acyclic <=> every component has |E| = |V| - 1
  std::size_t seen_edges = 0;
  std::set<VertexId> seen;
  for (VertexId root : g.vertex_ids()) {
    if (seen.count(root)) continue;
    std::size_t nv = 0, ne = 0;
    std::queue<VertexId> q;
    q.push(root);
    seen.insert(root);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      ++nv;
      ne += g.degree(v);
      for (VertexId u : g.neighbors(v))
        if (seen.insert(u).second) q.push(u);
    }
    ne /= 2;
    seen_edges += ne;
    if (ne != nv - 1) return false;
  }
  return seen_edges == g.edges().size();
}

std::vector<WeightedGraph> components(const WeightedGraph& g) {
  std::vector<WeightedGraph> out;
  std::set<VertexId> seen;
  for (VertexId root : g.vertex_ids()) {
    if (seen.count(root)) continue;
    WeightedGraph comp;
    std::queue<VertexId> q;
    q.push(root);
    seen.insert(root);
    std::vector<VertexId> verts;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      verts.push_back(v);
      for (VertexId u : g.neighbors(v))
        if (seen.insert(u).second) q.push(u);
    }
    std::sort(verts.begin(), verts.end());
    for (VertexId v : verts) comp.add_vertex_with_id(v, g.weight(v));
    for (VertexId v : verts)
      for (VertexId u : g.neighbors(v))
        if (v < u) comp.add_edge(v, u);
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

struct RNode {
  VertexId v;
  std::string code;
  std::vector<RNode> kids;  // sorted by code
};

RNode build_rooted(const WeightedGraph& g, VertexId v, VertexId parent, bool use_weights) {
  RNode n;
  n.v = v;
  for (VertexId u : g.neighbors(v))
    if (u != parent) n.kids.push_back(build_rooted(g, u, v, use_weights));
  std::stable_sort(n.kids.begin(), n.kids.end(),
                   [](const RNode& a, const RNode& b) { return a.code < b.code; });
  std::ostringstream os;
  os << '(' << (use_weights ? g.weight(v) : 0);
  for (const RNode& k : n.kids) os << k.code;
  os << ')';
  n.code = os.str();
  return n;
}

// Tree centers by leaf peeling; one or two vertices.
std::vector<VertexId> centers(const WeightedGraph& comp) {
  auto verts = comp.vertex_ids();
  if (verts.size() <= 2) return verts;
  std::map<VertexId, std::size_t> deg;
  std::set<VertexId> alive(verts.begin(), verts.end());
  std::vector<VertexId> layer;
  for (VertexId v : verts) {
    deg[v] = comp.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  while (alive.size() > 2) {
    std::vector<VertexId> next;
    for (VertexId v : layer) {
      alive.erase(v);
      for (VertexId u : comp.neighbors(v))
        if (alive.count(u) && --deg[u] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  return {alive.begin(), alive.end()};
}

// Canonical structure of one tree component: either a single rooted tree or a
// bicentral pair of halves (ordered by code).
struct TreeForm {
  bool bicentral = false;
  RNode a;        // rooted tree, or first half
  RNode b;        // second half when bicentral
  std::string code;
};

TreeForm tree_form(const WeightedGraph& comp, bool use_weights) {
  TreeForm f;
  auto c = centers(comp);
  if (c.size() == 1) {
    f.a = build_rooted(comp, c[0], -1, use_weights);
    f.code = "C" + f.a.code;
  } else {
    RNode x = build_rooted(comp, c[0], c[1], use_weights);
    RNode y = build_rooted(comp, c[1], c[0], use_weights);
    f.bicentral = true;
    if (y.code < x.code) std::swap(x, y);
    f.a = std::move(x);
    f.b = std::move(y);
    f.code = "B" + f.a.code + f.b.code;
  }
  return f;
}

void collect_labels(const RNode& n, std::vector<VertexId>& out) {
  out.push_back(n.v);
  for (const RNode& k : n.kids) collect_labels(k, out);
}

// All isomorphisms between two rooted trees of equal code, appended to `out`
// as partial vertex maps. Throws when more than `cap` maps accumulate.
void rooted_isos(const RNode& a, const RNode& b, std::vector<VertexMap>& out, std::size_t cap) {
  if (a.code != b.code) return;
  // match children groupwise by code
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) in kids
  for (std::size_t i = 0; i < a.kids.size();) {
    std::size_t j = i + 1;
    while (j < a.kids.size() && a.kids[j].code == a.kids[i].code) ++j;
    groups.push_back({i, j});
    i = j;
  }
  std::vector<VertexMap> acc{{{a.v, b.v}}};
  for (auto [lo, hi] : groups) {
    std::size_t k = hi - lo;
    // enumerate bijections of the group combined with per-pair isos
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    std::vector<VertexMap> next;
    do {
      std::vector<std::vector<VertexMap>> per_pair(k);
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        rooted_isos(a.kids[lo + i], b.kids[lo + perm[i]], per_pair[i], cap);
        if (per_pair[i].empty()) ok = false;
      }
      if (!ok) continue;
      // product over per_pair, merged into each accumulated map
      std::vector<std::size_t> idx(k, 0);
      for (;;) {
        VertexMap merged;
        for (std::size_t i = 0; i < k; ++i)
          merged.insert(per_pair[i][idx[i]].begin(), per_pair[i][idx[i]].end());
        for (const VertexMap& base : acc) {
          VertexMap m = base;
          m.insert(merged.begin(), merged.end());
          next.push_back(std::move(m));
          if (next.size() > cap) throw std::runtime_error("automorphism group exceeds cap");
        }
        std::size_t p = 0;
        while (p < k && ++idx[p] == per_pair[p].size()) idx[p++] = 0;
        if (p == k) break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    acc = std::move(next);
    if (acc.empty()) return;
  }
  for (VertexMap& m : acc) out.push_back(std::move(m));
}

// All isomorphisms between two tree components of equal code.
std::vector<VertexMap> component_isos(const TreeForm& s, const TreeForm& t, std::size_t cap) {
  std::vector<VertexMap> out;
  if (s.code != t.code) return out;
  if (!s.bicentral) {
    rooted_isos(s.a, t.a, out, cap);
    return out;
  }
  auto glue = [&](const RNode& x1, const RNode& y1, const RNode& x2, const RNode& y2) {
    std::vector<VertexMap> m1, m2;
    rooted_isos(x1, y1, m1, cap);
    rooted_isos(x2, y2, m2, cap);
    for (const auto& u : m1)
      for (const auto& v : m2) {
        VertexMap m = u;
        m.insert(v.begin(), v.end());
        out.push_back(std::move(m));
        if (out.size() > cap) throw std::runtime_error("automorphism group exceeds cap");
      }
  };
  glue(s.a, t.a, s.b, t.b);
  if (s.a.code == s.b.code) glue(s.a, t.b, s.b, t.a);
  return out;
}

struct ForestForm {
  std::vector<TreeForm> comps;  // sorted by code
  std::string code;
};

ForestForm forest_form(const WeightedGraph& g, bool use_weights) {
  ForestForm f;
  for (const WeightedGraph& c : components(g)) f.comps.push_back(tree_form(c, use_weights));
  std::stable_sort(f.comps.begin(), f.comps.end(),
                   [](const TreeForm& a, const TreeForm& b) { return a.code < b.code; });
  std::ostringstream os;
  for (const TreeForm& c : f.comps) os << c.code << ',';
  f.code = os.str();
  return f;
}

}  // namespace

std::string canonical_code(const WeightedGraph& g, bool use_weights) {
  if (!is_forest(g)) throw std::invalid_argument("canonical_code: not a forest");
  return forest_form(g, use_weights).code;
}

std::vector<VertexId> canonical_labeling(const WeightedGraph& g, bool use_weights) {
  if (!is_forest(g)) throw std::invalid_argument("canonical_labeling: not a forest");
  ForestForm f = forest_form(g, use_weights);
  std::vector<VertexId> order;
  for (const TreeForm& c : f.comps) {
    collect_labels(c.a, order);
    if (c.bicentral) collect_labels(c.b, order);
  }
  return order;
}

std::vector<VertexMap> automorphisms(const WeightedGraph& g, bool use_weights, std::size_t cap) {
  if (!is_forest(g)) throw std::invalid_argument("automorphisms: not a forest");
  ForestForm f = forest_form(g, use_weights);
  std::size_t n = f.comps.size();
  // group components of equal code
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && f.comps[j].code == f.comps[i].code) ++j;
    groups.push_back({i, j});
    i = j;
  }
  std::vector<VertexMap> acc{VertexMap{}};
  for (auto [lo, hi] : groups) {
    std::size_t k = hi - lo;
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    std::vector<VertexMap> next;
    do {
      std::vector<std::vector<VertexMap>> per(k);
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        per[i] = component_isos(f.comps[lo + i], f.comps[lo + perm[i]], cap);
        if (per[i].empty()) ok = false;
      }
      if (!ok) continue;
      std::vector<std::size_t> idx(k, 0);
      for (;;) {
        VertexMap merged;
        for (std::size_t i = 0; i < k; ++i)
          merged.insert(per[i][idx[i]].begin(), per[i][idx[i]].end());
        for (const VertexMap& base : acc) {
          VertexMap m = base;
          m.insert(merged.begin(), merged.end());
          next.push_back(std::move(m));
          if (next.size() > cap) throw std::runtime_error("automorphism group exceeds cap");
        }
        std::size_t p = 0;
        while (p < k && ++idx[p] == per[p].size()) idx[p++] = 0;
        if (p == k) break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    acc = std::move(next);
  }
  return acc;
}

WeightedGraph chain_graph(const std::vector<Weight>& terms) {
  WeightedGraph g;
  VertexId prev = -1;
  for (Weight t : terms) {
    VertexId v = g.add_vertex(t);
    if (prev >= 0) g.add_edge(prev, v);
    prev = v;
  }
  return g;
}

WeightedGraph relabel(const WeightedGraph& g, const VertexMap& map) {
  WeightedGraph out;
  for (const auto& [v, w] : g.vertices()) out.add_vertex_with_id(map.at(v), w);
  for (const auto& [a, b] : g.edges()) out.add_edge(map.at(a), map.at(b));
  return out;
}

}  // namespace blowcalc
