#include "rep12/models.hpp"

#include <gtest/gtest.h>

#include <random>

#include "rep12/oracle.hpp"
#include "rep12/patterns.hpp"
#include "test_util.hpp"

using namespace rep12;

TEST(ModelChecks, RejectMalformedModels) {
  EXPECT_THROW(check_interval_model({{1, 2}, {3}, {0, 1}}), InvalidInput);
  EXPECT_THROW(check_interval_model({{1, 4}, {3, 2}, {0, 1}}), InvalidInput);
  EXPECT_THROW(check_interval_model({{1, 3}, {2, 4}, {0, 2}}), InvalidInput);
  EXPECT_THROW(check_interval_model({{1, 2}, {3, 2}, {0, 1}}), InvalidInput);
  EXPECT_THROW(check_triangle_model({{1, 1}, {1, 3}, {2, 4}}), InvalidInput);
  EXPECT_NO_THROW(check_interval_model(test_util::bigraph_example_model()));
  EXPECT_NO_THROW(check_triangle_model(test_util::triangle_example_model()));
}

TEST(ModelChecks, ImpliedGraphsMatchTheWorkedExamples) {
  EXPECT_EQ(icb_implied_graph(test_util::bigraph_example_model()),
            test_util::bigraph_example().graph);
  EXPECT_EQ(triangle_implied_graph(test_util::triangle_example_model()),
            test_util::triangle_example_graph());
  EXPECT_EQ(validate_icb(test_util::bigraph_example().graph,
                         test_util::bigraph_example_model()),
            std::nullopt);
  EXPECT_EQ(validate_triangle(test_util::triangle_example_graph(),
                              test_util::triangle_example_model()),
            std::nullopt);
}

TEST(ModelChecks, ShrinkingAnIntervalBreaksValidation) {
  IntervalModel m = test_util::bigraph_example_model();
  m.hi[0] = 12;
  Graph g = test_util::bigraph_example().graph;
  auto bad = validate_icb(g, m);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(*bad, std::make_pair(0, 6));
  EXPECT_NE(g.adjacent(bad->first, bad->second),
            icb_pair_adjacent(m, bad->first, bad->second));
}

TEST(ModelChecks, ValidatorsRequireConsistentShapes) {
  Graph g = test_util::bigraph_example().graph;
  IntervalModel m = test_util::bigraph_example_model();
  m.lo.pop_back();
  m.hi.pop_back();
  m.cls.pop_back();
  EXPECT_THROW(validate_icb(g, m), InvalidInput);
  IntervalModel same_class = test_util::bigraph_example_model();
  same_class.cls.assign(8, 0);
  EXPECT_THROW(validate_icb(g, same_class), InvalidInput);
  TriangleModel t = test_util::triangle_example_model();
  t.apex[1] = t.apex[0];
  EXPECT_THROW(validate_triangle(test_util::triangle_example_graph(), t),
               InvalidInput);
}

TEST(Representants, BigraphExampleWordIsReproduced) {
  Representant rep = icb_to_representant(test_util::bigraph_example_model());
  EXPECT_EQ(rep.labels, identity_labeling(8));
  EXPECT_EQ(rep.word, test_util::bigraph_example_word());
  EXPECT_TRUE(u_represents(rep.word, test_util::bigraph_example()));
}

TEST(Representants, TriangleExampleWordIsReproduced) {
  Representant rep =
      triangle_to_representant(test_util::triangle_example_model());
  EXPECT_EQ(rep.labels, identity_labeling(6));
  EXPECT_EQ(rep.word, test_util::triangle_example_word());
  Graph co = complement(test_util::triangle_example_graph());
  EXPECT_TRUE(u_represents(rep.word, {co, rep.labels}));
}

TEST(Representants, RandomIntervalModelsYieldVerifiedWords) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 50;
    IntervalModel m = test_util::random_icb_model(n, rng);
    Representant rep = icb_to_representant(m);
    EXPECT_TRUE(u_represents(rep.word, {icb_implied_graph(m), rep.labels}));
  }
}

TEST(Representants, RandomTriangleModelsYieldVerifiedWords) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 50;
    TriangleModel m = test_util::random_triangle_model(n, rng);
    Representant rep = triangle_to_representant(m);
    Graph co = complement(triangle_implied_graph(m));
    EXPECT_TRUE(u_represents(rep.word, {co, rep.labels}));
  }
}

TEST(Representants, InvariantUnderEndpointPerturbation) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    IntervalModel m = test_util::random_icb_model(2 + trial % 20, rng);
    IntervalModel scaled = m;
    for (auto& x : scaled.lo) x = 3 * x + 7;
    for (auto& x : scaled.hi) x = 3 * x + 7;
    EXPECT_EQ(icb_implied_graph(scaled), icb_implied_graph(m));
    Representant a = icb_to_representant(m);
    Representant b = icb_to_representant(scaled);
    EXPECT_EQ(a.labels, b.labels);
    EXPECT_EQ(a.word, b.word);

    TriangleModel t = test_util::random_triangle_model(2 + trial % 20, rng);
    TriangleModel ts = t;
    for (auto& x : ts.apex) x = 3 * x + 7;
    for (auto& x : ts.lo) x = 3 * x + 7;
    for (auto& x : ts.hi) x = 3 * x + 7;
    EXPECT_EQ(triangle_to_representant(ts).word, triangle_to_representant(t).word);
  }
}

TEST(OrderingToTriangle, RealizesPatternFreeOrderingsOnly) {
  Graph p3 = path_graph(3);
  EXPECT_EQ(try_ordering_to_triangle_model(p3, {1, 2, 3}), std::nullopt);
  EXPECT_THROW(ordering_to_triangle_model(p3, {1, 2, 3}),
               OrderingNotPatternFree);
  ASSERT_TRUE(try_ordering_to_triangle_model(p3, {1, 3, 2}).has_value());
}

TEST(OrderingToTriangle, EdgelessPairBecomesTwoNestedSweeps) {
  Graph g(2);
  TriangleModel m = ordering_to_triangle_model(g, {1, 2});
  EXPECT_EQ(m.apex, (std::vector<double>{1, 2}));
  EXPECT_EQ(m.lo, (std::vector<double>{1, 2}));
  EXPECT_EQ(m.hi, (std::vector<double>{3, 4}));
  Representant rep = triangle_to_representant(m);
  EXPECT_EQ(rep.word, (Word{2, 1, 2, 1}));
  EXPECT_TRUE(u_represents(rep.word, {g, {1, 2}}));
}

TEST(OrderingToTriangle, BaseCoordinatesTileOneToTwoN) {
  std::mt19937 rng(53);
  PatternFamily family = i3j4q4_patterns();
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = test_util::random_graph(1 + trial % 7, rng, 0.3);
    auto labels = find_pattern_free_ordering(g, family);
    if (!labels) continue;
    TriangleModel m = ordering_to_triangle_model(g, *labels);
    EXPECT_EQ(validate_triangle(complement(g), m), std::nullopt);
    std::vector<double> ends(m.lo);
    ends.insert(ends.end(), m.hi.begin(), m.hi.end());
    std::sort(ends.begin(), ends.end());
    for (int i = 0; i < 2 * g.n(); ++i) EXPECT_EQ(ends[i], i + 1);
  }
}

TEST(OrderingToIcb, SingleEdgeNestsTheIntervals) {
  Graph k2 = Graph::from_edges(2, {{0, 1}});
  IntervalModel m = ordering_to_icb_model(k2, {0, 1}, {1, 2});
  EXPECT_EQ(m.lo, (std::vector<double>{1, 2}));
  EXPECT_EQ(m.hi, (std::vector<double>{4, 3}));
  EXPECT_EQ(validate_icb(k2, m), std::nullopt);
  Representant rep = icb_to_representant(m);
  EXPECT_EQ(rep.word, (Word{2, 2, 1, 1}));
}

TEST(OrderingToIcb, RejectsBadInputs) {
  Graph k2 = Graph::from_edges(2, {{0, 1}});
  EXPECT_THROW(ordering_to_icb_model(k2, {0, 0}, {1, 2}), InvalidInput);
  EXPECT_THROW(ordering_to_icb_model(k2, {0, 1}, {2, 1}), InvalidInput);
  EXPECT_THROW(ordering_to_icb_model(k2, {0}, {1, 2}), InvalidInput);
  EXPECT_THROW(ordering_to_icb_model(k2, {0, 2}, {1, 2}), InvalidInput);
}

TEST(OrderingToIcb, CycleInConstraintsSignalsAPattern) {
  Graph j = Graph::from_edges(4, {{0, 2}, {1, 3}});
  std::vector<int> cls{0, 0, 1, 1};
  EXPECT_EQ(try_ordering_to_icb_model(j, cls, identity_labeling(4)),
            std::nullopt);
  EXPECT_THROW(ordering_to_icb_model(j, cls, identity_labeling(4)),
               OrderingNotPatternFree);
  ASSERT_TRUE(contains_pattern(j, identity_labeling(4), icb_patterns()[0], &cls)
                  .has_value());
}

TEST(OrderingToIcb, RealizedModelsValidateAgainstTheGraph) {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = test_util::random_graph(1 + trial % 7, rng, 0.3);
    auto cls = bipartition(g);
    if (!cls) continue;
    auto labels = find_pattern_free_ordering(g, icb_patterns(), &*cls, true);
    if (!labels) continue;
    IntervalModel m = ordering_to_icb_model(g, *cls, *labels);
    EXPECT_EQ(validate_icb(g, m), std::nullopt);
    for (int v = 0; v < g.n(); ++v) {
      EXPECT_EQ(m.lo[v], (*labels)[v]);
      EXPECT_GT(m.hi[v], g.n());
      EXPECT_LE(m.hi[v], 2 * g.n());
    }
  }
}
