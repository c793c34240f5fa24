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

#include <random>
#include <vector>

#include "support/corpus.hpp"
#include "tangles.hpp"

namespace tangles {
namespace {

using namespace tangles::testing;

std::vector<Matroid> small_matroids() {
  std::vector<Matroid> out;
  for (const Graph& g : graph_corpus(2, 4)) {
    if (g.edge_count() >= 1 && g.edge_count() <= 5) out.push_back(Matroid::graphic(g));
  }
  out.push_back(Matroid::uniform(2, 4));
  out.push_back(Matroid::uniform(1, 3));
  out.push_back(Matroid::uniform(3, 5));
  out.push_back(Matroid::gf2({0b001, 0b010, 0b100, 0b011, 0b111}));
  return out;
}

TEST(MatroidRank, KnownValues) {
  Graph k4 = complete_graph(4);
  Matroid m = Matroid::graphic(k4);
  // Edges 01, 02, 03 form a spanning star.
  ElementSet star;
  for (std::size_t i = 0; i < k4.edge_count(); ++i) {
    if (k4.edges()[i].first == 0) star.insert(i);
  }
  EXPECT_EQ(m.rank(star), 3u);
  EXPECT_EQ(Matroid::gf2({0b001, 0b010, 0b100}).full_rank(), 3u);
  EXPECT_THROW(Matroid::uniform(3, 2), std::invalid_argument);
}

TEST(MatroidRank, Axioms) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::uint64_t> col(0, 7);
  std::vector<Matroid> ms = small_matroids();
  for (int i = 0; i < 10; ++i) {
    std::vector<std::uint64_t> cols;
    for (int j = 0; j < 6; ++j) cols.push_back(col(rng));
    ms.push_back(Matroid::gf2(cols));
  }
  for (const Matroid& m : ms) {
    for_each_subset(m.ground(), [&](ElementSet x) {
      EXPECT_LE(m.rank(x), x.size());
      for (std::size_t e = 0; e < m.size(); ++e) {
        if (x.contains(e)) continue;
        std::size_t grown = m.rank(x | ElementSet::singleton(e));
        EXPECT_TRUE(grown == m.rank(x) || grown == m.rank(x) + 1);
      }
      for_each_subset(m.ground(), [&](ElementSet y) {
        EXPECT_LE(m.rank(x | y) + m.rank(x & y), m.rank(x) + m.rank(y));
      });
    });
  }
}

TEST(MatroidLambda, Values) {
  Matroid k3 = Matroid::graphic(complete_graph(3));
  EXPECT_EQ(matroid_lambda(k3, ElementSet{}), 0);
  EXPECT_EQ(matroid_lambda(k3, ElementSet{0}), 1);
  EXPECT_EQ(matroid_lambda(Matroid::uniform(2, 4), ElementSet{0, 1}), 2);
  for (const Matroid& m : small_matroids()) EXPECT_FALSE(find_order_law_violation(matroid_universe(m)));
}

TEST(StarNorm, Values) {
  Matroid m = Matroid::uniform(2, 4);
  EXPECT_EQ(star_norm(m, std::vector<Separation>{}), 2);
  Separation s{ElementSet{0, 1, 2}, ElementSet{3}};
  EXPECT_EQ(star_norm(m, std::vector<Separation>{s}), 1);
}

// Members of a star have order at most the norm of the star.
TEST(StarNorm, BoundsMemberOrders) {
  for (const Matroid& m : small_matroids()) {
    SeparationSystem all = restrict_sk(matroid_universe(m), 1000);
    enumerate_stars(
        all, m.size(), [](std::size_t) { return true; },
        [&](std::span<const std::size_t> idx) {
          auto sigma = members_of(all, idx);
          Order norm = star_norm(m, sigma);
          for (const Separation& s : sigma) EXPECT_LE(matroid_lambda(m, s.a), norm);
        });
  }
}

TEST(MatroidFk, Membership) {
  Matroid u24 = Matroid::uniform(2, 4);
  for (Order k = 1; k <= 4; ++k) {
    Family f = matroid_family_Fk(u24, k);
    EXPECT_EQ(f.contains({}), 2 < k);
    Separation s{ElementSet{0, 1, 2}, ElementSet{3}};
    EXPECT_EQ(f.contains(std::vector<Separation>{s}), 1 < k);
  }
}

TEST(MatroidFk, Separable) {
  for (const Matroid& m : small_matroids()) {
    if (m.size() > 5) continue;
    for (Order k = 1; k <= 3; ++k) {
      SeparationSystem system = restrict_sk(matroid_universe(m), k);
      EXPECT_TRUE(is_F_separable(system, matroid_family_Fk(m, k)));
    }
  }
}

TEST(MatroidWidth, SingleNodeDecomposition) {
  for (const Matroid& m : small_matroids()) {
    MatroidTreeDecomposition td{DecorationTree(1), std::vector<std::size_t>(m.size(), 0)};
    EXPECT_EQ(matroid_td_width(m, td), static_cast<Order>(m.full_rank()));
  }
  Matroid m = Matroid::uniform(1, 3);
  SeparationSystem system = restrict_sk(matroid_universe(m), 2);
  auto tree = find_stree(system, matroid_family_Fk(m, 2));
  ASSERT_TRUE(tree.has_value());
  EXPECT_EQ(tree->node_count(), 1u);
  EXPECT_LT(matroid_td_width(m, matroid_stree_to_td(m, *tree)), 2);
}

TEST(MatroidWidth, CycleMatroidsMatchTreewidth) {
  for (const Graph& g : graph_corpus(2, 5)) {
    if (!is_connected(g) || g.edge_count() == 0) continue;
    Matroid m = Matroid::graphic(g);
    MatroidWidth w = matroid_treewidth(m);
    EXPECT_EQ(w.value, treewidth(g).value);
    EXPECT_LE(matroid_td_width(m, w.certificate), w.value);
  }
}

TEST(MatroidWidth, DualityAndRoundTrip) {
  std::vector<Matroid> ms = small_matroids();
  ms.push_back(Matroid::graphic(complete_graph(4)));
  ms.push_back(Matroid::uniform(3, 6));
  for (const Matroid& m : ms) {
    for (Order k = 1; k <= 4; ++k) {
      SeparationSystem system = restrict_sk(matroid_universe(m), k);
      Family f = matroid_family_Fk(m, k);
      DualityVerdict v = verify_duality(system, f, k);
      EXPECT_NE(v.tangle.has_value(), v.tree.has_value());
      if (!v.tree) continue;
      MatroidTreeDecomposition td = matroid_stree_to_td(m, *v.tree);
      EXPECT_EQ(td.tau.size(), m.size());
      EXPECT_LT(matroid_td_width(m, td), k);
      STree back = matroid_td_to_stree(m, td, k);
      EXPECT_TRUE(is_over(back, f));
      EXPECT_TRUE(labels_in(back, system));
    }
  }
}

}  // namespace
}  // namespace tangles
