#include "blowcalc/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace blowcalc {

namespace {

void check_bounds(const SearchBounds& b) {
  if (!(b.w_min <= -1 && -1 <= b.w_max))
    throw std::invalid_argument("search window must contain -1");
  if (b.budget == 0) throw std::invalid_argument("budget must be positive");
}

bool seq_in_bounds(const IntSeq& s, const SearchBounds& b) {
  if (s.size() > b.max_size) return false;
  return std::all_of(s.begin(), s.end(),
                     [&](Weight t) { return t >= b.w_min && t <= b.w_max; });
}

bool graph_in_bounds(const WeightedGraph& g, const SearchBounds& b) {
  if (g.size() > b.max_size) return false;
  for (const auto& [v, w] : g.vertices())
    if (w < b.w_min || w > b.w_max) return false;
  return true;
}

}  // namespace

SeqClosure bfs_seq_class(const IntSeq& x, const SearchBounds& b) {
  check_bounds(b);
  if (!seq_in_bounds(x, b)) throw std::invalid_argument("seed sequence violates bounds");
  SeqClosure out;
  std::deque<IntSeq> frontier{x};
  out.members.insert(x);
  while (!frontier.empty()) {
    if (out.members.size() >= b.budget) {
      out.budget_exhausted = true;
      break;
    }
    IntSeq cur = frontier.front();
    frontier.pop_front();
    std::vector<IntSeq> next = seq_blow_ups(cur);
    for (std::size_t j = 0; j < cur.size(); ++j)
      if (cur[j] == -1) next.push_back(seq_blow_down(cur, j));
    for (IntSeq& s : next) {
      if (!seq_in_bounds(s, b)) continue;
      if (out.members.insert(s).second) frontier.push_back(std::move(s));
    }
  }
  return out;
}

OracleVerdict oracle_seq_equivalent(const IntSeq& x, const IntSeq& y, const SearchBounds& b) {
  SeqClosure c = bfs_seq_class(x, b);
  if (c.members.count(y)) return OracleVerdict::Yes;
  return c.budget_exhausted ? OracleVerdict::BudgetExhausted : OracleVerdict::NoWithinBounds;
}

std::set<IntSeq> oracle_min_elements(const IntSeq& x, const SearchBounds& b) {
  std::set<IntSeq> out;
  for (const IntSeq& s : bfs_seq_class(x, b).members)
    if (is_minimal_seq(s)) out.insert(s);
  return out;
}

ForestClosure bfs_forest_class(const WeightedGraph& g, const SearchBounds& b) {
  check_bounds(b);
  if (!is_forest(g)) throw std::invalid_argument("bfs_forest_class: not a forest");
  if (!graph_in_bounds(g, b)) throw std::invalid_argument("seed forest violates bounds");
  ForestClosure out;
  std::deque<WeightedGraph> frontier{g};
  out.members.emplace(canonical_code(g), g);
  while (!frontier.empty()) {
    if (out.members.size() >= b.budget) {
      out.budget_exhausted = true;
      break;
    }
    WeightedGraph cur = frontier.front();
    frontier.pop_front();
    std::vector<WeightedGraph> next;
    for (VertexId v : cur.vertex_ids()) next.push_back(blow_up_vertex(cur, v).first);
    for (const auto& [a, bb] : cur.edges()) next.push_back(blow_up_edge(cur, a, bb).first);
    next.push_back(blow_up_free(cur).first);
    for (VertexId v : contractible_vertices(cur)) next.push_back(blow_down(cur, v));
    for (WeightedGraph& h : next) {
      if (!graph_in_bounds(h, b)) continue;
      std::string code = canonical_code(h);
      if (out.members.emplace(std::move(code), h).second) frontier.push_back(std::move(h));
    }
  }
  return out;
}

OracleVerdict oracle_forests_equivalent(const WeightedGraph& g, const WeightedGraph& h,
                                        const SearchBounds& b) {
  ForestClosure c = bfs_forest_class(g, b);
  if (c.members.count(canonical_code(h))) return OracleVerdict::Yes;
  return c.budget_exhausted ? OracleVerdict::BudgetExhausted : OracleVerdict::NoWithinBounds;
}

}  // namespace blowcalc
