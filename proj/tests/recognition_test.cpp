#include "rep12/recognition.hpp"

#include <gtest/gtest.h>

#include <random>

#include "rep12/oracle.hpp"
#include "test_util.hpp"

using namespace rep12;

namespace {

void expect_verified_certificate(const Graph& g, const Decision& d) {
  ASSERT_TRUE(d.representable);
  ASSERT_TRUE(d.certificate.has_value());
  EXPECT_FALSE(d.witness.has_value());
  EXPECT_TRUE(u_represents(d.certificate->word, {g, d.certificate->labels}));
}

void expect_chordless_cycle(const Graph& g, const std::vector<int>& cycle) {
  int k = static_cast<int>(cycle.size());
  ASSERT_GE(k, 3);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      EXPECT_EQ(g.adjacent(cycle[i], cycle[j]), consecutive)
          << "pair " << cycle[i] << "," << cycle[j];
    }
}

}  // namespace

TEST(ContainsInduced, FindsExactEmbeddings) {
  EXPECT_TRUE(contains_induced(cycle_graph(6), path_graph(4)).has_value());
  EXPECT_FALSE(contains_induced(cycle_graph(6), cycle_graph(5)).has_value());
  EXPECT_TRUE(contains_induced(complete_graph(4), complete_graph(3)).has_value());
  EXPECT_FALSE(contains_induced(path_graph(3), complete_graph(3)).has_value());
  Graph x = forbidden_grid_subgraphs()[5].graph;
  auto emb = contains_induced(x, test_util::bigraph_example().graph);
  ASSERT_TRUE(emb.has_value());
  Graph g1 = test_util::bigraph_example().graph;
  for (int u = 0; u < g1.n(); ++u)
    for (int v = u + 1; v < g1.n(); ++v)
      EXPECT_EQ(g1.adjacent(u, v), x.adjacent((*emb)[u], (*emb)[v]));
}

TEST(InducedCycle, FindsChordlessCyclesOfRequestedLength) {
  EXPECT_THROW(find_long_induced_cycle(cycle_graph(4), 2), InvalidInput);
  EXPECT_FALSE(find_long_induced_cycle(cycle_graph(7), 8).has_value());
  auto c8 = find_long_induced_cycle(cycle_graph(8), 8);
  ASSERT_TRUE(c8.has_value());
  EXPECT_EQ(c8->size(), 8u);
  expect_chordless_cycle(cycle_graph(8), *c8);
  Graph chorded = cycle_graph(8);
  chorded.add_edge(0, 4);
  EXPECT_FALSE(find_long_induced_cycle(chorded, 8).has_value());
  GridGraph grid = full_grid(4, 4);
  auto cyc = find_long_induced_cycle(grid.graph, 8);
  ASSERT_TRUE(cyc.has_value());
  EXPECT_GE(cyc->size(), 8u);
  expect_chordless_cycle(grid.graph, *cyc);
}

TEST(Recognition, SmallCyclesAndCliques) {
  expect_verified_certificate(cycle_graph(4), is_12_representable(cycle_graph(4)));
  for (int len = 5; len <= 8; ++len) {
    Decision d = is_12_representable(cycle_graph(len));
    EXPECT_FALSE(d.representable) << "cycle length " << len;
    ASSERT_TRUE(d.witness.has_value());
    EXPECT_EQ(d.witness->kind, "search-exhausted");
  }
  expect_verified_certificate(complete_graph(5), is_12_representable(complete_graph(5)));
  Decision k4 = is_12_representable(complete_graph(4));
  ASSERT_TRUE(k4.representable);
  EXPECT_EQ(k4.certificate->word, (Word{4, 4, 3, 3, 2, 2, 1, 1}));
  expect_verified_certificate(path_graph(6), is_12_representable(path_graph(6)));
  expect_verified_certificate(Graph(1), is_12_representable(Graph(1)));
  expect_verified_certificate(Graph(0), is_12_representable(Graph(0)));
}

TEST(Recognition, TriangleRouteModelsTheComplement) {
  Graph g = test_util::triangle_example_graph();
  Graph co = complement(g);
  Decision d = is_12_representable(co);
  expect_verified_certificate(co, d);
  const auto& m = std::get<TriangleModel>(d.certificate->model);
  EXPECT_EQ(validate_triangle(g, m), std::nullopt);
}

TEST(Recognition, BipartiteRouteProducesIntervalCertificates) {
  Graph g = test_util::bigraph_example().graph;
  Decision d = is_12_representable_bipartite(g);
  expect_verified_certificate(g, d);
  const auto& m = std::get<IntervalModel>(d.certificate->model);
  EXPECT_EQ(validate_icb(g, m), std::nullopt);
  EXPECT_THROW(is_12_representable_bipartite(cycle_graph(5)), InvalidInput);
  Decision c6 = is_12_representable_bipartite(cycle_graph(6));
  EXPECT_FALSE(c6.representable);
  EXPECT_EQ(c6.witness->kind, "search-exhausted");
  expect_verified_certificate(cycle_graph(4),
                              is_12_representable_bipartite(cycle_graph(4)));
}

TEST(Recognition, PipelinesAgreeOnRandomBipartiteGraphs) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = test_util::random_graph(1 + trial % 7, rng, 0.35);
    if (!bipartition(g)) continue;
    Decision bi = is_12_representable_bipartite(g);
    Decision gen = is_12_representable(g);
    EXPECT_EQ(bi.representable, gen.representable);
  }
}

TEST(Grid, SmallGridsAreRecognized) {
  expect_verified_certificate(full_grid(2, 2).graph,
                              grid_12_representable(full_grid(2, 2)));
  expect_verified_certificate(full_grid(1, 8).graph,
                              grid_12_representable(full_grid(1, 8)));
  expect_verified_certificate(full_grid(2, 4).graph,
                              grid_12_representable(full_grid(2, 4)));
}

TEST(Grid, FullThreeByThreeHasAnInducedEightCycle) {
  GridGraph gg = full_grid(3, 3);
  Decision d = grid_12_representable(gg);
  ASSERT_FALSE(d.representable);
  ASSERT_TRUE(d.witness.has_value());
  EXPECT_EQ(d.witness->kind, "induced-cycle");
  EXPECT_EQ(d.witness->vertices.size(), 8u);
  expect_chordless_cycle(gg.graph, d.witness->vertices);
  EXPECT_FALSE(is_12_representable(gg.graph).representable);
}

TEST(Grid, ForbiddenPointSetsAreTheirOwnWitnesses) {
  auto fixtures = forbidden_grid_subgraphs();
  std::vector<std::string> names{"t3", "2", "3", "4", "5", "x"};
  for (std::size_t k = 0; k < fixtures.size(); ++k) {
    Decision d = grid_12_representable(fixtures[k]);
    ASSERT_FALSE(d.representable) << "fixture " << k;
    ASSERT_TRUE(d.witness.has_value());
    EXPECT_EQ(d.witness->kind, "forbidden-grid-subgraph") << "fixture " << k;
    EXPECT_EQ(d.witness->detail, names[k]) << "fixture " << k;
    EXPECT_FALSE(is_12_representable(fixtures[k].graph).representable)
        << "fixture " << k;
  }
}

TEST(Trees, DoubleCaterpillarsAreRepresentable) {
  expect_verified_certificate(path_graph(10), tree_12_representable(path_graph(10)));
  Graph star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  expect_verified_certificate(star, tree_12_representable(star));
  Graph spider2 = Graph::from_edges(
      7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  expect_verified_certificate(spider2, tree_12_representable(spider2));
  Graph lopsided = Graph::from_edges(9, {{0, 1},
                                         {1, 2},
                                         {2, 3},
                                         {0, 4},
                                         {4, 5},
                                         {5, 6},
                                         {0, 7},
                                         {7, 8}});
  expect_verified_certificate(lopsided, tree_12_representable(lopsided));
}

TEST(Trees, ThreeDeepBranchesAreAWitness) {
  Graph t = t3().graph;
  Decision d = tree_12_representable(t);
  ASSERT_FALSE(d.representable);
  ASSERT_TRUE(d.witness.has_value());
  EXPECT_EQ(d.witness->kind, "t3-subtree");
  ASSERT_EQ(d.witness->vertices.size(), 10u);
  int center = d.witness->vertices[0];
  std::vector<int> seen{center};
  for (int b = 0; b < 3; ++b) {
    int first = d.witness->vertices[1 + 3 * b];
    EXPECT_TRUE(t.adjacent(center, first));
    for (int i = 0; i < 2; ++i)
      EXPECT_TRUE(t.adjacent(d.witness->vertices[1 + 3 * b + i],
                             d.witness->vertices[2 + 3 * b + i]));
    for (int i = 0; i < 3; ++i) seen.push_back(d.witness->vertices[1 + 3 * b + i]);
  }
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
  EXPECT_FALSE(is_12_representable(t).representable);
}

TEST(Trees, RejectsNonTrees) {
  EXPECT_THROW(tree_12_representable(cycle_graph(4)), InvalidInput);
  EXPECT_THROW(tree_12_representable(Graph(2)), InvalidInput);
  EXPECT_THROW(tree_12_representable(Graph(0)), InvalidInput);
  Graph cycle_plus = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_THROW(tree_12_representable(cycle_plus), InvalidInput);
}

TEST(Recognition, RepresentabilityIsHereditary) {
  Graph g = test_util::bigraph_example().graph;
  ASSERT_TRUE(is_12_representable(g).representable);
  std::mt19937 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
      if (rng() % 2) keep.push_back(v);
    Graph sub = induced_subgraph(g, keep).graph;
    EXPECT_TRUE(is_12_representable(sub).representable);
  }
}
