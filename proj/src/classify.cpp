#include "blowcalc/classify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace blowcalc {

namespace {

std::pair<VertexId, VertexId> stored_key(VertexId a, VertexId b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

void append_seq(std::ostringstream& os, const IntSeq& s) {
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ')';
}

}  // namespace

const IntSeq& EdgeMapData::stored(VertexId u, VertexId v) const {
  auto it = entries.find(stored_key(u, v));
  if (it == entries.end()) throw std::invalid_argument("edge map: no such path");
  return it->second;
}

IntSeq EdgeMapData::at(VertexId u, VertexId v) const {
  const IntSeq& s = stored(u, v);
  return u <= v ? s : reversed(s);
}

EdgeMapData edge_map(const SkeletalMap& sk) {
  if (!is_pseudo_minimal(sk.target))
    throw std::invalid_argument("edge_map: target is not pseudo-minimal");
  EdgeMapData out;
  for (const auto& [a, b] : sk.skeleton.edges())
    out.entries[{a, b}] = w_gamma(sk.target, skeletal_path(sk, a, b));
  return out;
}

SharpGraph sharp_graph(const WeightedGraph& s, const EdgeMapData& w) {
  SharpGraph out;
  for (VertexId v : s.vertex_ids())
    if (s.degree(v) > 2) out.vertices.insert(v);
  for (const auto& [key, word] : w.entries) {
    auto [a, b] = key;
    bool a_branch = out.vertices.count(a), b_branch = out.vertices.count(b);
    if (seq_det(word) != 0) continue;
    if (a_branch && b_branch)
      out.edges.insert(key);
    else if (a_branch)
      out.special.insert(a);
    else if (b_branch)
      out.special.insert(b);
  }
  return out;
}

std::vector<std::set<VertexId>> SharpGraph::nonspecial_components() const {
  std::map<VertexId, VertexId> root;
  for (VertexId v : vertices) root[v] = v;
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& [a, b] : edges) root[find(a)] = find(b);
  std::map<VertexId, std::set<VertexId>> comps;
  for (VertexId v : vertices) comps[find(v)].insert(v);
  std::vector<std::set<VertexId>> out;
  for (auto& [r, members] : comps) {
    bool has_special = std::any_of(members.begin(), members.end(),
                                   [&](VertexId v) { return special.count(v) != 0; });
    if (!has_special) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
  return out;
}

std::map<VertexId, Weight> branch_weight_vector(const SkeletalMap& sk) {
  std::map<VertexId, Weight> out;
  for (VertexId v : sk.skeleton.vertex_ids())
    if (sk.skeleton.degree(v) > 2) out[v] = sk.target.weight(sk.vmap.at(v));
  return out;
}

EtaVector eta_of(const SkeletalMap& sk) {
  EdgeMapData w = edge_map(sk);
  SharpGraph sharp = sharp_graph(sk.skeleton, w);
  auto weights = branch_weight_vector(sk);
  EtaVector out;
  for (const auto& comp : sharp.nonspecial_components()) {
    Int sum = 0;
    for (VertexId v : comp) sum += weights.at(v);
    out.values.push_back({*comp.begin(), sum});
  }
  return out;
}

EdgeMapData canonical_edge_map(const EdgeMapData& w) {
  EdgeMapData out;
  for (const auto& [key, word] : w.entries) out.entries[key] = canonical_form(word).to_seq();
  return out;
}

Int delta_c(const EdgeMapData& w, const EdgeMapData& w_prime,
            const std::set<VertexId>& component) {
  // accumulate 2 * delta_C: a pair inside the component contributes both
  // half-weighted orientations, one crossing the boundary contributes its
  // head orientation in full
  Int twice = 0;
  for (const auto& [key, word] : w.entries) {
    auto [a, b] = key;
    bool a_in = component.count(a), b_in = component.count(b);
    if (!a_in && !b_in) continue;
    const IntSeq& target = w_prime.stored(a, b);
    if (a_in && b_in) {
      twice += delta(word, target) + delta(reversed(word), reversed(target));
    } else if (a_in) {
      twice += 2 * delta(word, target);
    } else {
      twice += 2 * delta(reversed(word), reversed(target));
    }
  }
  if (twice % 2 != 0) throw std::logic_error("delta_c: sum is not an integer");
  return twice / 2;
}

namespace {

// (W_alpha, eta_alpha) serialized against the fixed stored-orientation order
// of the relabeled skeleton; comparable across graphs with equal skeletons.
std::string serialize_state(const WeightedGraph& skel,
                            const std::vector<std::pair<VertexId, VertexId>>& stored_pairs,
                            const EdgeMapData& w,
                            const std::map<VertexId, Weight>& branch_weights) {
  EdgeMapData can = canonical_edge_map(w);
  std::ostringstream os;
  os << "W";
  for (const auto& [a, b] : stored_pairs) {
    os << '[' << a << '-' << b << ']';
    append_seq(os, can.entries.at({a, b}));
  }
  SharpGraph sharp = sharp_graph(skel, w);
  os << "|eta";
  for (const auto& comp : sharp.nonspecial_components()) {
    Int value = delta_c(w, can, comp);
    for (VertexId v : comp) value += branch_weights.at(v);
    os << '[' << *comp.begin() << ']' << value;
  }
  return os.str();
}

constexpr char kEmptyFingerprint[] = "FP1|empty";

}  // namespace

std::string ClassFingerprint::text() const {
  static const char* hex = "0123456789abcdef";
  std::string out = "FP1:";
  for (unsigned char c : bytes) {
    out += hex[c >> 4];
    out += hex[c & 0xf];
  }
  return out;
}

ClassFingerprint fingerprint(const WeightedGraph& g, std::size_t aut_cap) {
  if (!is_forest(g)) throw std::invalid_argument("fingerprint: not a forest");
  WeightedGraph m = minimalize(g);
  if (m.empty()) return ClassFingerprint{kEmptyFingerprint};

  SkeletalMap sk = skeleton_of(m);
  // canonical relabeling of the skeleton; label -> original skeleton vertex
  std::vector<VertexId> order = canonical_labeling(sk.skeleton, false);
  VertexMap to_label;
  for (std::size_t i = 0; i < order.size(); ++i) to_label[order[i]] = static_cast<VertexId>(i);
  WeightedGraph skel = relabel(sk.skeleton, to_label);
  std::string skel_code = canonical_code(skel, false);

  std::vector<std::pair<VertexId, VertexId>> stored_pairs(skel.edges().begin(),
                                                          skel.edges().end());
  std::vector<VertexId> branch;
  for (VertexId v : skel.vertex_ids())
    if (skel.degree(v) > 2) branch.push_back(v);

  std::string best;
  for (const VertexMap& alpha : automorphisms(skel, false, aut_cap)) {
    EdgeMapData w;
    for (const auto& [a, b] : stored_pairs) {
      GPath p = skeletal_path(sk, order[static_cast<std::size_t>(alpha.at(a))],
                              order[static_cast<std::size_t>(alpha.at(b))]);
      w.entries[{a, b}] = w_gamma(sk.target, p);
    }
    std::map<VertexId, Weight> bw;
    for (VertexId v : branch)
      bw[v] = sk.target.weight(sk.vmap.at(order[static_cast<std::size_t>(alpha.at(v))]));
    std::string ser = serialize_state(skel, stored_pairs, w, bw);
    if (best.empty() || ser < best) best = std::move(ser);
  }
  return ClassFingerprint{"FP1|" + skel_code + "|" + best};
}

bool forests_equivalent(const WeightedGraph& g, const WeightedGraph& h) {
  return fingerprint(g) == fingerprint(h);
}

WeightedGraph transplant(const WeightedGraph& g, const GPath& p, const IntSeq& y) {
  PathType tau = path_type(g, p);  // validates the path
  IntSeq capped = w_gamma(g, p);
  if (tau == PathType::PlusMinus || tau == PathType::PlusPlus)
    capped.insert(capped.begin(), g.weight(p.vertices.front()));
  if (tau == PathType::MinusPlus || tau == PathType::PlusPlus)
    capped.push_back(g.weight(p.vertices.back()));
  if (!tau_equivalent(tau, capped, y))
    throw std::invalid_argument("transplant: replacement is not tau-equivalent");

  WeightedGraph out = g;
  bool keep_head = tau == PathType::PlusMinus || tau == PathType::PlusPlus;
  bool keep_tail = tau == PathType::MinusPlus || tau == PathType::PlusPlus;
  VertexId head = p.vertices.front(), tail = p.vertices.back();
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (keep_head && i == 0) continue;
    if (keep_tail && i + 1 == p.vertices.size()) continue;
    out.remove_vertex(p.vertices[i]);
  }
  IntSeq core = y;
  if (keep_head) {
    out.set_weight(head, y.front());
    core.erase(core.begin());
  }
  if (keep_tail) {
    out.set_weight(tail, y.back());
    core.pop_back();
  }
  VertexId prev = keep_head ? head : -1;
  for (Weight t : core) {
    VertexId v = out.add_vertex(t);
    if (prev >= 0) out.add_edge(prev, v);
    prev = v;
  }
  if (keep_tail && prev >= 0 && prev != tail) out.add_edge(prev, tail);
  return out;
}

namespace {

// Rebuild the target of `sk` with each stored path realized by its entry in
// `targets`, branch weights corrected by the delta shifts.
WeightedGraph realize_edge_map(const SkeletalMap& sk, const EdgeMapData& words,
                               const std::map<std::pair<VertexId, VertexId>, IntSeq>& targets) {
  const WeightedGraph& s = sk.skeleton;
  WeightedGraph out;
  std::map<VertexId, Int> corrected;
  for (VertexId v : s.vertex_ids())
    if (s.degree(v) > 2) corrected[v] = Int(sk.target.weight(sk.vmap.at(v)));

  for (const auto& [key, x] : words.entries) {
    auto [a, b] = key;
    const IntSeq& y = targets.at(key);
    bool a_branch = corrected.count(a), b_branch = corrected.count(b);
    Int d = seq_det(x);
    if (d != 0) {
      if (a_branch) corrected[a] += delta(x, y);
      if (b_branch) corrected[b] += delta(reversed(x), reversed(y));
    } else if (a_branch && b_branch) {
      corrected[a] += delta(x, y);  // whole correction on the stored head
    }
  }
  for (const auto& [v, w] : corrected) out.add_vertex_with_id(sk.vmap.at(v), to_weight(w));

  VertexId fresh = 0;
  for (const auto& [v, w] : sk.target.vertices()) fresh = std::max(fresh, v + 1);
  for (const auto& [key, y] : targets) {
    auto [a, b] = key;
    bool a_branch = s.degree(a) > 2, b_branch = s.degree(b) > 2;
    IntSeq core = y;
    VertexId prev = -1;
    if (a_branch) prev = sk.vmap.at(a);
    for (Weight t : core) {
      VertexId v = fresh++;
      out.add_vertex_with_id(v, t);
      if (prev >= 0) out.add_edge(prev, v);
      prev = v;
    }
    if (b_branch && prev >= 0) out.add_edge(prev, sk.vmap.at(b));
  }
  return out;
}

}  // namespace

WeightedGraph canonical_forest(const WeightedGraph& g) {
  if (!is_forest(g)) throw std::invalid_argument("canonical_forest: not a forest");
  WeightedGraph m = minimalize(g);
  if (m.empty()) return m;
  SkeletalMap sk = skeleton_of(m);
  EdgeMapData words = edge_map(sk);
  std::map<std::pair<VertexId, VertexId>, IntSeq> targets;
  for (const auto& [key, x] : words.entries) {
    auto [a, b] = key;
    // realize toward the branch end so the rebuilt ids keep the canonical
    // word on the stored orientation
    if (sk.skeleton.degree(a) <= 2 && sk.skeleton.degree(b) > 2) {
      targets[key] = reversed(canonical_form(reversed(x)).to_seq());
    } else {
      targets[key] = canonical_form(x).to_seq();
    }
  }
  return realize_edge_map(sk, words, targets);
}

ModelSet minimal_models(const WeightedGraph& g, const EnumBounds& bounds) {
  if (!is_forest(g)) throw std::invalid_argument("minimal_models: not a forest");
  ModelSet out;
  out.complete = true;
  WeightedGraph m = minimalize(g);
  if (m.empty()) {
    out.models.push_back(m);
    return out;
  }
  SkeletalMap sk = skeleton_of(m);
  EdgeMapData words = edge_map(sk);

  std::vector<std::pair<VertexId, VertexId>> keys;
  std::vector<std::vector<IntSeq>> factors;
  for (const auto& [key, x] : words.entries) {
    auto [a, b] = key;
    bool a_branch = sk.skeleton.degree(a) > 2, b_branch = sk.skeleton.degree(b) > 2;
    if ((a_branch || b_branch) && seq_det(x) == 0)
      out.complete = false;  // weight splits along det-0 caps form an infinite family
    MinimalSet ms = minimal_in_class(x, bounds);
    out.complete = out.complete && ms.complete;
    keys.push_back(key);
    factors.push_back(std::move(ms.elements));
  }

  std::map<std::string, WeightedGraph> dedup;
  std::vector<std::size_t> idx(factors.size(), 0);
  for (;;) {
    std::map<std::pair<VertexId, VertexId>, IntSeq> targets;
    for (std::size_t i = 0; i < keys.size(); ++i) targets[keys[i]] = factors[i][idx[i]];
    WeightedGraph model = realize_edge_map(sk, words, targets);
    dedup.emplace(canonical_code(model), std::move(model));
    std::size_t p = 0;
    while (p < idx.size() && ++idx[p] == factors[p].size()) idx[p++] = 0;
    if (p == idx.size()) break;
  }
  for (auto& [code, model] : dedup) out.models.push_back(std::move(model));
  return out;
}

}  // namespace blowcalc
