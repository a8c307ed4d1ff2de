#include <gtest/gtest.h>

#include "coseg/generators.hpp"
#include "coseg/graph.hpp"
#include "oracles.hpp"

using namespace coseg;

TEST(Graph, MakeGraph) {
  Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(k3.m(), 3u);
  EXPECT_TRUE(k3.has_edge(2, 0));

  Graph single = make_graph(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(single.m(), 1u);

  EXPECT_THROW(make_graph(1, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(make_graph(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(make_graph(3, {{-1, 2}}), InvalidArgument);
}

TEST(Graph, Complement) {
  EXPECT_EQ(complement(make_graph(3, {{0, 1}, {1, 2}, {0, 2}})).m(), 0u);
  EXPECT_EQ(complement(make_graph(3, {{0, 1}, {1, 2}})), make_graph(3, {{0, 2}}));
  Graph k4 = complement(Graph(4));
  EXPECT_EQ(k4.m(), 6u);
  for (std::uint32_t mask = 0; mask < (1u << 10); mask += 37) {
    Graph g = oracle::graph_from_mask(5, mask);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(complement(g).m(), 10u - g.m());
  }
}

TEST(Recognition, Examples) {
  Graph k4 = complement(Graph(4));
  EXPECT_THROW(recognize_and_complete(k4), NotPartialTwoTree);

  Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  TwoTreeCompletion c = recognize_and_complete(c4);
  EXPECT_EQ(c.fill_edges.size(), 1u);
  const Edge diagonal = *c.fill_edges.begin();
  EXPECT_TRUE(diagonal == Edge(0, 2) || diagonal == Edge(1, 3));
  // Lowest-id removal: vertex 0 goes first and fills 1-3.
  EXPECT_EQ(diagonal, Edge(1, 3));

  TwoTreeCompletion single = recognize_and_complete(make_graph(2, {{0, 1}}));
  EXPECT_TRUE(single.fill_edges.empty());
  EXPECT_EQ(single.completed.m(), 1u);

  EXPECT_THROW(recognize_and_complete(Graph(1)), InvalidArgument);
}

TEST(Recognition, DisconnectedAndSparseInputsAreCompleted) {
  for (int n = 2; n <= 7; ++n) {
    TwoTreeCompletion c = recognize_and_complete(Graph(n));
    EXPECT_EQ(c.completed.m(), static_cast<std::size_t>(2 * n - 3));
    EXPECT_EQ(c.fill_edges.size(), c.completed.m());
    EXPECT_NO_THROW(peel_order(c));
  }
  Graph two_triangles = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  TwoTreeCompletion c = recognize_and_complete(two_triangles);
  for (const Edge& e : two_triangles.edges()) EXPECT_TRUE(c.completed.has_edge(e));
  EXPECT_EQ(replay(6, peel_order(c)), c.completed);
}

TEST(Peel, Examples) {
  Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  PeelSequence seq = peel_order(k3);
  ASSERT_EQ(seq.steps.size(), 1u);
  EXPECT_EQ(seq.base_edge, Edge(1, 2));
  EXPECT_EQ(seq.steps[0], (PeelStep{0, 1, 2}));

  Graph tt = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  seq = peel_order(tt);
  EXPECT_EQ(seq.steps.size(), 2u);
  EXPECT_EQ(replay(4, seq), tt);
  // The hand-built order is also a valid construction order.
  EXPECT_EQ(replay(4, PeelSequence{Edge(0, 1), {{2, 0, 1}, {3, 1, 2}}}), tt);

  EXPECT_TRUE(peel_order(make_graph(2, {{0, 1}})).steps.empty());
}

TEST(Peel, RejectsNonTwoTrees) {
  EXPECT_THROW(peel_order(make_graph(4, {{0, 1}, {1, 2}, {2, 3}})), MalformedTwoTree);       // too few edges
  EXPECT_THROW(peel_order(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}})), MalformedTwoTree);
  // 2n-3 edges but a 4-cycle plus a pendant triangle edge: not a 2-tree.
  EXPECT_THROW(peel_order(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {0, 4}, {1, 4}})), MalformedTwoTree);
  EXPECT_THROW(peel_order(Graph(2)), MalformedTwoTree);
}

TEST(Recognition, AgreesWithBruteForceTreewidthUpToFiveVertices) {
  for (int n = 2; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      Graph g = oracle::graph_from_mask(n, mask);
      bool accepted = true;
      try {
        TwoTreeCompletion c = recognize_and_complete(g);
        PeelSequence seq = peel_order(c);
        EXPECT_EQ(replay(n, seq), c.completed);
        EXPECT_EQ(c.completed.m(), static_cast<std::size_t>(2 * n - 3));
      } catch (const NotPartialTwoTree&) {
        accepted = false;
      }
      EXPECT_EQ(accepted, oracle::treewidth_at_most_2(g)) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Generators, Examples) {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    Graph single = gen_instance(InstanceKind::partial2tree, 2, KeepProb::make(1, 1), seed);
    EXPECT_EQ(single, make_graph(2, {{0, 1}}));
    EXPECT_EQ(gen_instance(InstanceKind::partial2tree, 8, KeepProb::make(1, 1), seed).m(), 13u);
    EXPECT_NO_THROW(recognize_and_complete(gen_instance(InstanceKind::outerplanar, 6, KeepProb::make(1, 1), seed)));
  }
  EXPECT_THROW(KeepProb::make(3, 2), InvalidArgument);
  EXPECT_THROW(KeepProb::parse("1.5"), InvalidArgument);
  EXPECT_EQ(KeepProb::parse("0.75").str(), "3/4");
  EXPECT_EQ(KeepProb::parse("2/4").str(), "1/2");
  EXPECT_THROW(gen_instance(InstanceKind::partial2tree, 1, KeepProb::make(1, 1), 0), InvalidArgument);
}

TEST(Generators, DeterministicInSeed) {
  for (auto kind : {InstanceKind::partial2tree, InstanceKind::outerplanar, InstanceKind::seriesparallel}) {
    EXPECT_EQ(gen_instance(kind, 12, KeepProb::make(3, 4), 5), gen_instance(kind, 12, KeepProb::make(3, 4), 5));
  }
}

TEST(Generators, MaximalInstancesHaveExpectedSize) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (int n = 3; n <= 12; ++n) {
      // Maximal outerplanar graphs are 2-trees.
      Graph op = gen_instance(InstanceKind::outerplanar, n, KeepProb::make(1, 1), seed);
      EXPECT_EQ(op.m(), static_cast<std::size_t>(2 * n - 3));
      Graph sp = gen_instance(InstanceKind::seriesparallel, n, KeepProb::make(1, 1), seed);
      EXPECT_LE(sp.m(), static_cast<std::size_t>(2 * n - 3));
      EXPECT_GE(sp.m(), static_cast<std::size_t>(n - 1));
    }
  }
}

TEST(Generators, EveryInstanceIsAPartialTwoTree) {
  for (auto kind : {InstanceKind::partial2tree, InstanceKind::outerplanar, InstanceKind::seriesparallel})
    for (auto keep : {KeepProb::make(1, 1), KeepProb::make(3, 4), KeepProb::make(1, 2), KeepProb::make(0, 1)})
      for (std::uint64_t seed = 0; seed < 25; ++seed)
        for (int n : {2, 3, 7, 16, 40}) {
          Graph g = gen_instance(kind, n, keep, seed);
          EXPECT_NO_THROW(peel_order(recognize_and_complete(g))) << to_string(kind) << " n=" << n;
        }
}
