#include <doctest.h>

#include "blowcalc/classify.hpp"
#include "blowcalc/enumeration.hpp"
#include "blowcalc/invariants.hpp"
#include "blowcalc/oracle.hpp"

using namespace blowcalc;

TEST_CASE("sequence closure basics") {
  SearchBounds b{4, -3, 1, 100000};
  CHECK(oracle_seq_equivalent({-1}, {}, b) == OracleVerdict::Yes);
  CHECK(oracle_seq_equivalent({}, {-1}, b) == OracleVerdict::Yes);
  CHECK(oracle_seq_equivalent({1}, {0, 0}, b) == OracleVerdict::Yes);
  CHECK(oracle_seq_equivalent({-2}, {-3}, b) == OracleVerdict::NoWithinBounds);

  SearchBounds tiny{4, -3, 1, 5};
  CHECK(oracle_seq_equivalent({1}, {-3, 0, 1, -2}, tiny) == OracleVerdict::BudgetExhausted);

  CHECK_THROWS_AS(bfs_seq_class({9}, b), std::invalid_argument);
  CHECK_THROWS_AS(bfs_seq_class({0}, SearchBounds{4, 0, 3, 100}), std::invalid_argument);
}

TEST_CASE("closure members share all class invariants") {
  SearchBounds b{5, -4, 2, 200000};
  for (const IntSeq& seed : {IntSeq{1}, IntSeq{0, -2}, IntSeq{-2, 0, 2}}) {
    SeqClosure c = bfs_seq_class(seed, b);
    CHECK_FALSE(c.budget_exhausted);
    Int d = seq_det(seed);
    unsigned h = seq_hodge(seed);
    auto sb = sub_bar(seed);
    for (const IntSeq& m : c.members) {
      CHECK(seq_det(m) == d);
      CHECK(seq_hodge(m) == h);
      CHECK(sub_bar(m) == sb);
      CHECK(seq_equivalent(seed, m));
    }
  }
}

TEST_CASE("closure is deterministic") {
  SearchBounds b{4, -3, 1, 100000};
  CHECK(bfs_seq_class({1}, b).members == bfs_seq_class({1}, b).members);
}

TEST_CASE("oracle_min_elements") {
  SearchBounds b{4, -3, 2, 500000};
  auto mins = oracle_min_elements({1}, b);
  CHECK(mins.count({1}));
  CHECK(mins.count({0, 2}));
  CHECK(mins.count({2, 0}));
  CHECK(mins.count({0, 0}));
  CHECK_FALSE(mins.count({0, -1}));
  // every found element belongs to one of the known families within bounds
  EnumBounds eb{6, 6, -5, 4};
  auto families = minimal_in_class({1}, eb).elements;
  std::set<IntSeq> fam(families.begin(), families.end());
  for (const IntSeq& m : mins) CHECK(fam.count(m));

  auto adm = oracle_min_elements({-2, -3}, SearchBounds{5, -5, 1, 200000});
  CHECK(adm == std::set<IntSeq>{{-2, -3}});
}

TEST_CASE("forest closure") {
  WeightedGraph star;
  VertexId c = star.add_vertex(-1);
  for (int i = 0; i < 3; ++i) star.add_edge(c, star.add_vertex(-2));
  SearchBounds b{6, -4, 1, 30000};
  ForestClosure fc = bfs_forest_class(star, b);
  CHECK(fc.members.size() > 1);
  ClassFingerprint fp = fingerprint(star);
  Int d = det_graph(star);
  for (const auto& [code, g] : fc.members) {
    CHECK(det_graph(g) == d);
    CHECK(fingerprint(g) == fp);
  }

  WeightedGraph other = star;
  other.set_weight(c, -2);
  CHECK(oracle_forests_equivalent(star, other, b) == OracleVerdict::NoWithinBounds);
  CHECK(oracle_forests_equivalent(star, star, b) == OracleVerdict::Yes);
}
