#include <doctest.h>

#include <random>
#include <set>

#include "blowcalc/skeleton.hpp"
#include "fixtures.hpp"

using namespace blowcalc;
using fixtures::random_forest;

TEST_CASE("paths") {
  auto p3 = paths(chain_graph({1, 2, 3}));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].rev() == p3[1]);
  CHECK(p3[0].vertices.size() == 3);

  auto single = paths(chain_graph({7}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].vertices == std::vector<VertexId>{0});

  WeightedGraph star;
  VertexId c = star.add_vertex(0);
  for (int i = 0; i < 3; ++i) star.add_edge(c, star.add_vertex(-2));
  CHECK(paths(star).size() == 6);

  // every non-singleton path appears with its reversal
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    WeightedGraph g = random_forest(rng, 8, -3, 1);
    auto ps = paths(g);
    std::set<GPath> set(ps.begin(), ps.end());
    CHECK(set.size() == ps.size());
    for (const GPath& p : ps) {
      CHECK(is_path(g, p));
      CHECK(set.count(p.rev()));
    }
  }
}

TEST_CASE("path_type and w_gamma") {
  WeightedGraph chain = chain_graph({4, 9, -1, 3});
  GPath full = paths(chain)[0];
  CHECK(path_type(chain, full) == PathType::MinusMinus);
  CHECK(w_gamma(chain, full) == IntSeq{4, 9, -1, 3});

  WeightedGraph star;
  VertexId c = star.add_vertex(0);
  VertexId leaf = star.add_vertex(-7);
  star.add_edge(c, leaf);
  for (int i = 0; i < 2; ++i) star.add_edge(c, star.add_vertex(-2));
  GPath down{{c, leaf}};
  CHECK(path_type(star, down) == PathType::PlusMinus);
  CHECK(w_gamma(star, down) == IntSeq{-7});
  CHECK(path_type(star, down.rev()) == PathType::MinusPlus);

  WeightedGraph tree = fixtures::two_branch_tree({1, 1});
  GPath interior{{0, 1, 2, 3}};
  CHECK(path_type(tree, interior) == PathType::PlusPlus);
  CHECK(w_gamma(tree, interior) == IntSeq{1, 1});

  CHECK_THROWS_AS(path_type(chain, GPath{{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(w_gamma(chain, GPath{{1}}), std::invalid_argument);
}

TEST_CASE("skeleton_of") {
  SkeletalMap chain = skeleton_of(chain_graph({1, 2, 3, 4}));
  CHECK(chain.skeleton.size() == 2);
  CHECK(chain.skeleton.edges().size() == 1);
  CHECK(chain.vmap.at(0) == 0);
  CHECK(chain.vmap.at(3) == 3);

  SkeletalMap single = skeleton_of(chain_graph({5}));
  CHECK(single.skeleton.size() == 2);
  REQUIRE(single.skeleton.edges().size() == 1);
  for (const auto& [s, t] : single.vmap) CHECK(t == 0);
  CHECK(skeletal_path(single, 0, 1).vertices == std::vector<VertexId>{0});

  CHECK(skeleton_of(WeightedGraph{}).skeleton.empty());
}

TEST_CASE("skeleton has no degree 0 or 2 vertices and a valid skeletal map") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedGraph g = random_forest(rng, 8, -3, 1);
    SkeletalMap sk = skeleton_of(g);
    for (VertexId v : sk.skeleton.vertex_ids()) {
      CHECK(sk.skeleton.degree(v) != 0);
      CHECK(sk.skeleton.degree(v) != 2);
      CHECK(g.degree(sk.vmap.at(v)) != 2);
    }
    // surjectivity onto P(g): each target path is realized by a skeleton edge
    std::set<GPath> realized;
    for (const auto& [a, b] : sk.skeleton.edges()) {
      realized.insert(skeletal_path(sk, a, b));
      realized.insert(skeletal_path(sk, b, a));
    }
    auto ps = paths(g);
    CHECK(realized == std::set<GPath>(ps.begin(), ps.end()));
    // fibers of size two only over degree-0 images, joined by a skeleton edge
    std::map<VertexId, std::vector<VertexId>> fibers;
    for (const auto& [s, t] : sk.vmap) fibers[t].push_back(s);
    for (const auto& [t, pre] : fibers) {
      CHECK(pre.size() <= 2);
      if (pre.size() == 2) {
        CHECK(g.degree(t) == 0);
        CHECK(sk.skeleton.has_edge(pre[0], pre[1]));
      }
    }
  }
}

TEST_CASE("skeleton code invariant under strict blow-ups") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    WeightedGraph g = minimalize(random_forest(rng, 7, -3, 1));
    if (g.empty()) continue;
    std::string code = canonical_code(skeleton_of(g).skeleton, false);
    WeightedGraph cur = g;
    for (int step = 0; step < 8; ++step) {
      // strict moves only: subdivisional, or at a vertex of degree <= 1
      std::vector<WeightedGraph> options;
      for (const auto& [a, b] : cur.edges()) options.push_back(blow_up_edge(cur, a, b).first);
      for (VertexId v : cur.vertex_ids())
        if (cur.degree(v) <= 1) options.push_back(blow_up_vertex(cur, v).first);
      cur = options[rng() % options.size()];
      CHECK(canonical_code(skeleton_of(cur).skeleton, false) == code);
      CHECK(is_pseudo_minimal(cur));
    }
  }
}

TEST_CASE("is_pseudo_minimal") {
  CHECK_FALSE(is_pseudo_minimal(chain_graph({-1})));
  CHECK(is_pseudo_minimal(chain_graph({-2, -3})));

  // minimal forests are pseudo-minimal
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 40; ++trial)
    CHECK(is_pseudo_minimal(minimalize(random_forest(rng, 7, -3, 1))));

  // two degree-3 vertices joined through a single -1: the only empty-class
  // path is (+,+), so pseudo-minimal while not minimal
  WeightedGraph t = fixtures::two_branch_tree({-1});
  CHECK(w_gamma(t, GPath{{0, 1, 2}}) == IntSeq{-1});
  CHECK_FALSE(contractible_vertices(t).empty());
  CHECK(is_pseudo_minimal(t));
}
