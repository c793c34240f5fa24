// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "tangles.hpp"

namespace tangles {
namespace {

using testing::graph_corpus;
using testing::path_graph;

// Path a - b - c with alpha pointing from a towards c.
STree path_tree(const Separation& first, const Separation& second) {
  STree s;
  s.add_node();
  s.add_node();
  s.add_edge(0, 1, first);
  s.add_edge(1, 2, second);
  return s;
}

const ElementSet V4 = ElementSet::full(4);

TEST(DecorationTree, TreeShape) {
  DecorationTree t(3);
  EXPECT_FALSE(t.is_tree());
  t.add_edge(0, 1);
  t.add_edge(1, 2);
  EXPECT_TRUE(t.is_tree());
  EXPECT_EQ(t.degree(1), 2u);
  EXPECT_EQ(t.distances_from(0)[2], 2u);
  EXPECT_TRUE(t.edge_between(2, 1).has_value());
  EXPECT_FALSE(t.edge_between(0, 2).has_value());
  EXPECT_THROW(t.add_edge(1, 1), std::invalid_argument);
}

TEST(STree, AlphaInvolution) {
  Separation r{ElementSet{0}, V4};
  STree s = path_tree(r, Separation{ElementSet{0, 1}, ElementSet{1, 2, 3}});
  for (const OrientedEdge& e : s.oriented_edges()) EXPECT_EQ(s.alpha(e.reversed()), invert(s.alpha(e)));
  EXPECT_THROW(s.alpha(0, 2), std::out_of_range);
}

TEST(STree, OrientedStars) {
  STree single;
  EXPECT_TRUE(oriented_star_at(0, single).empty());

  Separation r{ElementSet{0}, V4};
  STree s = path_tree(r, Separation{ElementSet{0, 1}, ElementSet{1, 2, 3}});
  EXPECT_EQ(oriented_star_at(1, s).size(), 2u);
  EXPECT_EQ(oriented_star_at(0, s), std::vector<Separation>{invert(r)});
}

TEST(STree, IsOverSingleNode) {
  Graph g = path_graph(3);
  EXPECT_TRUE(is_over(STree{}, family_Fk(g, 4)));  // |G| < k puts ∅ in F_k
  EXPECT_FALSE(is_over(STree{}, family_Fk(g, 3)));
}

TEST(STree, NaturalEdgeOrder) {
  STree s = path_tree(Separation{ElementSet{0}, V4}, Separation{ElementSet{0, 1}, ElementSet{1, 2, 3}});
  const DecorationTree& t = s.tree();
  EXPECT_EQ(natural_edge_order({0, 1}, {1, 2}, t), EdgeOrder::less);
  EXPECT_EQ(natural_edge_order({1, 2}, {0, 1}, t), EdgeOrder::greater);
  EXPECT_EQ(natural_edge_order({0, 1}, {1, 0}, t), EdgeOrder::incomparable);
  EXPECT_EQ(natural_edge_order({0, 1}, {2, 1}, t), EdgeOrder::incomparable);
  // Pointing away from each other is also incomparable.
  EXPECT_EQ(natural_edge_order({1, 0}, {1, 2}, t), EdgeOrder::incomparable);
}

TEST(STree, OrderViolationOnInvertedMiddleLabel) {
  Separation r{ElementSet{0}, V4};
  Separation s{ElementSet{0, 1}, ElementSet{1, 2, 3}};
  EXPECT_TRUE(check_order_preserving(path_tree(r, s)));
  STree bad = path_tree(r, invert(s));
  auto v = find_order_violation(bad);
  ASSERT_TRUE(v.has_value());
  EXPECT_FALSE(check_order_preserving(bad));
}

TEST(STree, SearchCertificatesAreOrderPreservingStarTrees) {
  for (const Graph& g : graph_corpus(1, 5)) {
    for (Order k = 1; k <= 4; ++k) {
      SeparationSystem system = vertex_separations(g, k);
      Family f = family_Fk(g, k);
      auto tree = find_stree(system, f);
      if (!tree) continue;
      EXPECT_TRUE(tree->tree().is_tree());
      EXPECT_TRUE(is_over(*tree, f));
      EXPECT_TRUE(labels_in(*tree, system));
      EXPECT_TRUE(check_order_preserving(*tree));
      for (std::size_t t = 0; t < tree->node_count(); ++t) {
        auto star = oriented_star_at(t, *tree);
        EXPECT_TRUE(is_star(star));
        if (tree->tree().degree(t) == 3) {
          EXPECT_EQ(star.size(), 3u);
        }
      }
    }
  }
}

}  // namespace
}  // namespace tangles
