#pragma once

#include <map>
#include <set>
#include <string>

#include "blowcalc/graph.hpp"
#include "blowcalc/seq.hpp"

namespace blowcalc {

/// Bounds for the brute-force search: length (sequences) or vertex count
/// (forests), a weight window, and a node budget.
struct SearchBounds {
  std::size_t max_size = 6;
  Weight w_min = -6;
  Weight w_max = 3;
  std::size_t budget = 1000000;
};

enum class OracleVerdict { Yes, NoWithinBounds, BudgetExhausted };

struct SeqClosure {
  std::set<IntSeq> members;
  bool budget_exhausted = false;
};

/// Closure of {X} under blow-ups and blow-downs staying within bounds.
SeqClosure bfs_seq_class(const IntSeq& x, const SearchBounds& b);

OracleVerdict oracle_seq_equivalent(const IntSeq& x, const IntSeq& y, const SearchBounds& b);

/// Minimal sequences found in the bounded closure of X.
std::set<IntSeq> oracle_min_elements(const IntSeq& x, const SearchBounds& b);

struct ForestClosure {
  std::map<std::string, WeightedGraph> members;  // keyed by canonical_code
  bool budget_exhausted = false;
};

ForestClosure bfs_forest_class(const WeightedGraph& g, const SearchBounds& b);

OracleVerdict oracle_forests_equivalent(const WeightedGraph& g, const WeightedGraph& h,
                                        const SearchBounds& b);

}  // namespace blowcalc
