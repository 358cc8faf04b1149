#include <gtest/gtest.h>

#include "nonarch/skeleton.hpp"
#include "oracles.hpp"

using namespace nonarch;

namespace {

using GP = GraphPoint;

// One edge of length 2 between v0 and v1, a cusp at v0.
SkeletonGraph base() {
  SkeletonGraph g;
  g.num_vertices = 2;
  g.edges = {{0, 1, 2}};
  g.cusps = {0};
  return g;
}

// base() with its edge cut at 1/2 (new vertex 2, stored reversed on the
// first half) and a tree 2 - 3 - 4 hanging at the cut, a cusp at 4.
Refinement cut_and_hang() {
  Refinement r;
  r.coarse = base();
  r.fine.num_vertices = 5;
  r.fine.edges = {{2, 0, mpq_class(1, 2)}, {2, 1, mpq_class(3, 2)}, {2, 3, 5}, {3, 4, 1}};
  r.fine.cusps = {0, 4};
  r.vertex_map = {0, 1};
  r.edge_paths = {{{0, -1}, {1, 1}}};
  r.cusp_map = {0};
  return r;
}

// cut_and_hang().fine with edge 1 cut at 1 (new vertex 5) and a leaf at 0.
Refinement second_step() {
  Refinement r;
  r.coarse = cut_and_hang().fine;
  r.fine = r.coarse;
  r.fine.num_vertices = 7;
  r.fine.edges[1] = {2, 5, 1};
  r.fine.edges.push_back({5, 1, mpq_class(1, 2)});
  r.fine.edges.push_back({0, 6, 3});
  r.vertex_map = {0, 1, 2, 3, 4};
  r.edge_paths = {{{0, 1}}, {{1, 1}, {4, 1}}, {{2, 1}}, {{3, 1}}};
  r.cusp_map = {0, 1};
  return r;
}

Tower tower() {
  Tower t;
  t.graphs = {base(), cut_and_hang().fine, second_step().fine};
  t.steps = {cut_and_hang(), second_step()};
  return t;
}

}  // namespace

TEST(Graph, Validation) {
  EXPECT_NO_THROW(validate_graph(base()));
  SkeletonGraph g = base();
  g.edges[0].length = 0;
  EXPECT_THROW(validate_graph(g), std::invalid_argument);
  g = base();
  g.num_vertices = 3;
  EXPECT_THROW(validate_graph(g), std::invalid_argument);
}

TEST(Graph, CanonicalPoints) {
  const SkeletonGraph g = base();
  EXPECT_EQ(canonical_point(g, GP::on_edge(0, 0)), GP::vertex(0));
  EXPECT_EQ(canonical_point(g, GP::on_edge(0, 2)), GP::vertex(1));
  EXPECT_EQ(canonical_point(g, GP::on_cusp(0, 0)), GP::vertex(0));
  EXPECT_THROW(canonical_point(g, GP::on_edge(0, 3)), std::invalid_argument);
  EXPECT_THROW(canonical_point(g, GP::vertex(5)), std::invalid_argument);
}

TEST(Retract, Examples) {
  const RefinementMap r(cut_and_hang());
  // Already on the image.
  EXPECT_EQ(r.retract(GP::vertex(1)), GP::vertex(1));
  EXPECT_EQ(r.retract(GP::on_cusp(0, 7)), GP::on_cusp(0, 7));
  // Reversed half: offset 1/4 from vertex 2 is 1/4 from v0.
  EXPECT_EQ(r.retract(GP::on_edge(0, mpq_class(1, 4))), GP::on_edge(0, mpq_class(1, 4)));
  EXPECT_EQ(r.retract(GP::on_edge(1, mpq_class(1, 2))), GP::on_edge(0, 1));
  // Hanging tree and its cusp go to the attachment point.
  EXPECT_EQ(r.retract(GP::vertex(4)), GP::on_edge(0, mpq_class(1, 2)));
  EXPECT_EQ(r.retract(GP::on_edge(2, 3)), GP::on_edge(0, mpq_class(1, 2)));
  EXPECT_EQ(r.retract(GP::on_cusp(1, 9)), GP::on_edge(0, mpq_class(1, 2)));
}

TEST(Retract, EmbedThenRetractIsIdentity) {
  const RefinementMap r(cut_and_hang());
  for (const GP& x : {GP::vertex(0), GP::on_edge(0, mpq_class(1, 3)), GP::on_edge(0, mpq_class(1, 2)),
                      GP::on_edge(0, mpq_class(7, 4)), GP::on_cusp(0, 2)}) {
    EXPECT_EQ(r.retract(r.embed(x)), canonical_point(base(), x));
  }
  EXPECT_EQ(r.embed(GP::on_edge(0, mpq_class(1, 2))), GP::vertex(2));
}

TEST(Retract, MatchesNearestPointOracle) {
  for (int seed = 0; seed < 15; ++seed) {
    const Tower t = random_tower(static_cast<std::uint64_t>(seed), 3);
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed) + 100);
    for (std::size_t s = 0; s < t.steps.size(); ++s) {
      const RefinementMap r(t.steps[s]);
      for (const auto& x : random_points(t.graphs[s + 1], rng, 40)) {
        EXPECT_EQ(r.retract(x), oracle::nearest_image(t.steps[s], x)) << to_string(x);
      }
    }
  }
}

TEST(Refinement, RejectsBadData) {
  Refinement r = cut_and_hang();
  r.vertex_map = {0, 0};
  EXPECT_THROW(RefinementMap{r}, std::invalid_argument);
  r = cut_and_hang();
  r.edge_paths = {{{1, 1}, {0, -1}}};
  EXPECT_THROW(RefinementMap{r}, std::invalid_argument);
  r = cut_and_hang();
  r.fine.edges[1].length = 2;
  EXPECT_THROW(RefinementMap{r}, std::invalid_argument);
  r = cut_and_hang();
  r.fine.edges.push_back({3, 0, 1});  // the tree now touches the image twice
  EXPECT_THROW(RefinementMap{r}, std::invalid_argument);
  r = cut_and_hang();
  r.cusp_map = {1};
  EXPECT_THROW(RefinementMap{r}, std::invalid_argument);
}

TEST(Compose, IdentityAndSubdivision) {
  Refinement id;
  id.coarse = id.fine = base();
  id.vertex_map = {0, 1};
  id.edge_paths = {{{0, 1}}};
  id.cusp_map = {0};
  const std::vector<GP> samples{GP::vertex(0), GP::on_edge(0, 1), GP::on_cusp(0, 3)};
  EXPECT_TRUE(compose_check(id, id, samples).ok);

  Refinement sub;
  sub.coarse = base();
  sub.fine.num_vertices = 3;
  sub.fine.edges = {{0, 2, 1}, {2, 1, 1}};
  sub.fine.cusps = {0};
  sub.vertex_map = {0, 1};
  sub.edge_paths = {{{0, 1}, {1, 1}}};
  sub.cusp_map = {0};
  EXPECT_TRUE(compose_check(sub, id, {GP::vertex(2), GP::on_edge(1, mpq_class(1, 3))}).ok);
  const RefinementMap m(sub);
  EXPECT_EQ(m.retract(GP::on_edge(1, mpq_class(1, 3))), GP::on_edge(0, mpq_class(4, 3)));
}

TEST(Compose, ComposedPathsAreCorrect) {
  const Refinement c = compose(cut_and_hang(), second_step());
  const RefinementMap m(c);
  EXPECT_EQ(m.retract(GP::vertex(5)), GP::on_edge(0, mpq_class(3, 2)));
  EXPECT_EQ(m.retract(GP::vertex(6)), GP::vertex(0));
  std::mt19937_64 rng(1);
  const auto samples = random_points(second_step().fine, rng, 50);
  EXPECT_TRUE(compose_check(second_step(), cut_and_hang(), samples).ok);
}

TEST(Compose, RandomTowers) {
  for (int seed = 0; seed < 10; ++seed) {
    const Tower t = random_tower(static_cast<std::uint64_t>(seed) * 7 + 3, 4);
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
    for (std::size_t s = 0; s + 2 < t.graphs.size(); ++s) {
      const ComposeReport rep = compose_check(t.steps[s + 1], t.steps[s], random_points(t.graphs[s + 2], rng, 100));
      EXPECT_TRUE(rep.ok) << rep.detail;
    }
  }
}

TEST(Tower, Separation) {
  const Tower t = tower();
  EXPECT_NO_THROW(validate_tower(t));
  // Distinct already on the coarsest graph.
  EXPECT_EQ(tower_separation(t, GP::vertex(0), GP::vertex(1)), 0u);
  // Both in the first hanging tree: together until level 1.
  EXPECT_EQ(tower_separation(t, GP::vertex(3), GP::vertex(4)), 1u);
  // The leaf hung at level 2 against v0.
  EXPECT_EQ(tower_separation(t, GP::vertex(6), GP::vertex(0)), 2u);
  // Interior points of one coarse edge are distinct at level 0.
  EXPECT_EQ(tower_separation(t, GP::on_edge(1, mpq_class(1, 2)), GP::on_edge(4, mpq_class(1, 4))), 0u);
  EXPECT_THROW(tower_separation(t, GP::vertex(2), GP::on_edge(0, 0)), std::invalid_argument);
  EXPECT_EQ(tower_image(t, GP::on_edge(5, 1), 1), GP::vertex(0));
}

TEST(Tower, ValidationCatchesMismatch) {
  Tower t = tower();
  t.graphs[1].edges[2].length = 6;
  EXPECT_THROW(validate_tower(t), std::invalid_argument);
  t = tower();
  t.steps.pop_back();
  EXPECT_THROW(validate_tower(t), std::invalid_argument);
}

TEST(Subdivision, Examples) {
  const CompletedOrder one = subdivision_union({2, {{1}}});
  ASSERT_EQ(one.points.size(), 3u);
  EXPECT_EQ(one.points[0].kind, OrderPoint::Kind::kZero);
  EXPECT_EQ(one.points[1], (OrderPoint{OrderPoint::Kind::kInterior, 1}));
  EXPECT_EQ(one.points[2].kind, OrderPoint::Kind::kOne);

  const CompletedOrder dy = subdivision_union({1, {{}, {mpq_class(1, 2)}, {mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4)}}});
  std::vector<mpq_class> interior;
  for (const auto& x : dy.points)
    if (x.kind == OrderPoint::Kind::kInterior) interior.push_back(x.t);
  EXPECT_EQ(interior, (std::vector<mpq_class>{mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4)}));
  for (std::size_t i = 0; i + 1 < dy.points.size(); ++i) {
    EXPECT_TRUE(dy.less(dy.points[i], dy.points[i + 1]));
    EXPECT_TRUE(dy.less(dy.reverse(dy.points[i + 1]), dy.reverse(dy.points[i])));
  }
  for (const auto& x : dy.points) EXPECT_EQ(dy.reverse(dy.reverse(x)), x);
  EXPECT_EQ(dy.reverse(OrderPoint{OrderPoint::Kind::kInterior, mpq_class(1, 4)}).t, mpq_class(3, 4));
}

TEST(Subdivision, RejectsNonNestedLevels) {
  EXPECT_THROW(subdivision_union({1, {{mpq_class(1, 2)}, {mpq_class(1, 3)}}}), std::invalid_argument);
  EXPECT_THROW(subdivision_union({1, {{mpq_class(3, 2)}}}), std::invalid_argument);
}

TEST(Subdivision, OfTowerEdge) {
  const SubdivisionSet s = subdivision_of(tower(), 0);
  EXPECT_EQ(s.length, 2);
  ASSERT_EQ(s.levels.size(), 3u);
  EXPECT_TRUE(s.levels[0].empty());
  EXPECT_EQ(s.levels[1], std::vector<mpq_class>{mpq_class(1, 2)});
  EXPECT_EQ(s.levels[2], (std::vector<mpq_class>{mpq_class(1, 2), mpq_class(3, 2)}));
  for (int seed = 0; seed < 10; ++seed) {
    const Tower t = random_tower(static_cast<std::uint64_t>(seed), 4);
    for (long e = 0; e < static_cast<long>(t.graphs[0].edges.size()); ++e) {
      EXPECT_NO_THROW(subdivision_union(subdivision_of(t, e)));
    }
  }
}

TEST(TateCycle, Rotation) {
  const SkeletonGraph g = tate_cycle_graph(3, 2);
  EXPECT_NO_THROW(validate_graph(g));
  EXPECT_EQ(g.edges.size(), 3u);
  EXPECT_EQ(rotate(g, GP::vertex(0), 1), GP::vertex(1));
  EXPECT_EQ(rotate(g, GP::on_edge(2, 1), 1), GP::on_edge(0, 1));
  EXPECT_EQ(rotate(g, GP::on_cusp(1, 5), -1), GP::on_cusp(0, 5));
  for (const GP& x : {GP::vertex(2), GP::on_edge(1, mpq_class(1, 3)), GP::on_cusp(0, 4)}) {
    EXPECT_EQ(rotate(g, x, 3), x);
    EXPECT_EQ(rotate(g, rotate(g, x, 1), 1), rotate(g, x, 2));
  }
  const SkeletonGraph loop = tate_cycle_graph(1, 1);
  EXPECT_EQ(loop.edges[0].u, loop.edges[0].v);
  EXPECT_THROW(tate_cycle_graph(0, 1), std::invalid_argument);
}
