#include <doctest.h>

#include <algorithm>
#include <random>

#include "blowcalc/graph.hpp"
#include "blowcalc/invariants.hpp"
#include "blowcalc/textio.hpp"

using namespace blowcalc;

namespace {

// Random weighted forest: each vertex attaches to an earlier one or starts a
// new component.
WeightedGraph random_forest(std::mt19937_64& rng, std::size_t max_vertices, Weight w_min,
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

}  // namespace

TEST_CASE("blow_up_vertex") {
  WeightedGraph g = chain_graph({0});
  auto [g2, rec] = blow_up_vertex(g, 0);
  CHECK(canonical_code(g2) == canonical_code(chain_graph({-1, -1})));
  CHECK(g2.weight(rec.created) == -1);

  WeightedGraph h = chain_graph({5});
  auto [h2, hrec] = blow_up_vertex(h, 0);
  CHECK(h2.weight(0) == 4);
  CHECK(h2.degree(hrec.created) == 1);

  CHECK_THROWS_AS(blow_up_vertex(g, 99), std::invalid_argument);

  auto restored = blow_down(g2, rec.created);
  CHECK(canonical_code(restored) == canonical_code(g));
}

TEST_CASE("blow_up_edge") {
  WeightedGraph g = chain_graph({0, 0});
  auto [g2, rec] = blow_up_edge(g, 0, 1);
  CHECK(canonical_code(g2) == canonical_code(chain_graph({-1, -1, -1})));

  WeightedGraph h = chain_graph({-2, -3});
  auto [h2, hrec] = blow_up_edge(h, 0, 1);
  CHECK(canonical_code(h2) == canonical_code(chain_graph({-3, -1, -4})));
  CHECK(det_graph(h2) == det_graph(h));
  CHECK(det_graph(h) == 5);

  CHECK(canonical_code(blow_down(h2, hrec.created)) == canonical_code(h));
  CHECK_THROWS_AS(blow_up_edge(g, 0, 0), std::invalid_argument);
  WeightedGraph two;
  two.add_vertex(0);
  two.add_vertex(0);
  CHECK_THROWS_AS(blow_up_edge(two, 0, 1), std::invalid_argument);
}

TEST_CASE("blow_up_free") {
  WeightedGraph empty;
  auto [g, rec] = blow_up_free(empty);
  CHECK(g.size() == 1);
  CHECK(g.weight(rec.created) == -1);

  WeightedGraph h = chain_graph({-2});
  auto [h2, hrec] = blow_up_free(h);
  CHECK(h2.size() == 2);
  CHECK(h2.degree(hrec.created) == 0);
  CHECK(det_graph(h2) == det_graph(h));  // det([-1]) = 1
}

TEST_CASE("contractible_vertices") {
  CHECK(contractible_vertices(chain_graph({-1})) == std::set<VertexId>{0});
  CHECK(contractible_vertices(chain_graph({-2, -1, -2})) == std::set<VertexId>{1});

  WeightedGraph tri;
  for (int i = 0; i < 3; ++i) tri.add_vertex(-1);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  CHECK(contractible_vertices(tri).empty());
}

TEST_CASE("blow_down") {
  CHECK(blow_down(chain_graph({-1}), 0).empty());
  CHECK(canonical_code(blow_down(chain_graph({-3, -1, -4}), 1)) ==
        canonical_code(chain_graph({-2, -3})));
  WeightedGraph g = chain_graph({0, -1});
  WeightedGraph down = blow_down(g, 1);
  CHECK(canonical_code(down) == canonical_code(chain_graph({1})));
  CHECK(det_graph(g) == det_graph(down));
  CHECK_THROWS_AS(blow_down(chain_graph({0, -1}), 0), std::invalid_argument);
}

TEST_CASE("is_strict") {
  WeightedGraph h = chain_graph({-2, -3});
  auto [h2, edge_rec] = blow_up_edge(h, 0, 1);
  CHECK(is_strict(h, edge_rec));

  WeightedGraph star;
  VertexId c = star.add_vertex(0);
  for (int i = 0; i < 3; ++i) star.add_edge(c, star.add_vertex(-2));
  auto [s2, center_rec] = blow_up_vertex(star, c);
  CHECK_FALSE(is_strict(star, center_rec));
  auto [s3, leaf_rec] = blow_up_vertex(star, 1);
  CHECK(is_strict(star, leaf_rec));

  auto [f2, free_rec] = blow_up_free(star);
  CHECK_FALSE(is_strict(star, free_rec));
}

TEST_CASE("minimalize") {
  // [-1,-1] ~ [0] (det 0), so it contracts to the single 0 vertex, not to
  // the empty graph
  CHECK(canonical_code(minimalize(chain_graph({-1, -1}))) == canonical_code(chain_graph({0})));
  CHECK(canonical_code(minimalize(chain_graph({-2, -1, -2}))) ==
        canonical_code(chain_graph({0})));
  CHECK(minimalize(chain_graph({-1})).empty());
  WeightedGraph m = chain_graph({-2, -3});
  CHECK(minimalize(m) == m);
  CHECK(contractible_vertices(minimalize(chain_graph({-1, -2, -1, 0}))).empty());
}

TEST_CASE("forest and components") {
  WeightedGraph tri;
  for (int i = 0; i < 3; ++i) tri.add_vertex(-1);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  CHECK_FALSE(is_forest(tri));
  CHECK(is_forest(chain_graph({0, 0})));

  WeightedGraph two = chain_graph({1, 2});
  two.remove_edge(0, 1);
  auto comps = components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].weight(0) == 1);
  CHECK(comps[1].weight(1) == 2);
}

TEST_CASE("canonical_code") {
  CHECK(canonical_code(chain_graph({-2, -3})) == canonical_code(chain_graph({-3, -2})));
  CHECK(canonical_code(chain_graph({-2, -3})) != canonical_code(chain_graph({-2, -4})));

  WeightedGraph star;
  VertexId c = star.add_vertex(7);
  for (int i = 0; i < 3; ++i) star.add_edge(c, star.add_vertex(-2));
  WeightedGraph relab = relabel(star, VertexMap{{0, 12}, {1, 4}, {2, 30}, {3, 2}});
  CHECK(canonical_code(star) == canonical_code(relab));

  CHECK_NOTHROW(canonical_code(WeightedGraph{}));
}

TEST_CASE("automorphisms") {
  CHECK(automorphisms(chain_graph({0, 0})).size() == 2);

  WeightedGraph star;
  VertexId c = star.add_vertex(0);
  for (int i = 0; i < 3; ++i) star.add_edge(c, star.add_vertex(0));
  CHECK(automorphisms(star, false).size() == 6);

  // caterpillar: 5-spine with pendants on the three interior vertices
  WeightedGraph cat;
  for (int i = 0; i < 5; ++i) cat.add_vertex(0);
  for (int i = 0; i + 1 < 5; ++i) cat.add_edge(i, i + 1);
  for (int i = 1; i <= 3; ++i) cat.add_edge(i, cat.add_vertex(0));
  CHECK(automorphisms(cat, false).size() == 8);

  // group axioms on a weighted forest
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    WeightedGraph g = random_forest(rng, 7, -3, 1);
    auto auts = automorphisms(g);
    std::set<VertexMap> set(auts.begin(), auts.end());
    CHECK(set.size() == auts.size());
    for (const auto& f : auts) {
      VertexMap inv;
      for (const auto& [a, b] : f) inv[b] = a;
      CHECK(set.count(inv));
      for (const auto& h : auts) {
        VertexMap comp;
        for (const auto& [a, b] : f) comp[a] = h.at(b);
        CHECK(set.count(comp));
      }
    }
  }
}

TEST_CASE("blow-up then blow-down round trip on random forests") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedGraph g = random_forest(rng, 6, -4, 2);
    std::string code = canonical_code(g);

    auto [f, fr] = blow_up_free(g);
    CHECK(canonical_code(blow_down(f, fr.created)) == code);

    auto ids = g.vertex_ids();
    if (!ids.empty()) {
      VertexId v = ids[rng() % ids.size()];
      auto [h, hr] = blow_up_vertex(g, v);
      CHECK(canonical_code(blow_down(h, hr.created)) == code);
    }
    if (!g.edges().empty()) {
      auto it = g.edges().begin();
      std::advance(it, rng() % g.edges().size());
      auto [h, hr] = blow_up_edge(g, it->first, it->second);
      CHECK(canonical_code(blow_down(h, hr.created)) == code);
    }
  }
}

TEST_CASE("minimalize leaves no contractible vertex") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedGraph g = random_forest(rng, 7, -3, 1);
    CHECK(contractible_vertices(minimalize(g)).empty());
  }
}

TEST_CASE("graph text round trip") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    WeightedGraph g = random_forest(rng, 7, -5, 3);
    WeightedGraph back = parse_graph(graph_to_string(g));
    CHECK(canonical_code(back) == canonical_code(g));
  }
  CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("v 1 -2\nv 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("v 1 x\n"), ParseError);
}
