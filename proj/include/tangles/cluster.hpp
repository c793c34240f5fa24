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

#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "duality.hpp"
#include "setsep.hpp"
#include "universe.hpp"

namespace tangles {

/// A grey-scale image; pixel (x,y) has index y*width + x.
struct PixelGrid {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> intensity;

  std::size_t size() const { return width * height; }
  std::uint8_t at(std::size_t x, std::size_t y) const { return intensity[y * width + x]; }
};

/// Reads a plain (P2) or raw (P5) PGM with maxval <= 255.
inline PixelGrid read_pgm(std::istream& in) {
  auto token = [&]() {
    std::string t;
    while (in >> t) {
      if (t[0] != '#') return t;
      std::string rest;
      std::getline(in, rest);
    }
    throw std::runtime_error("truncated PGM header");
  };
  std::string magic = token();
  if (magic != "P2" && magic != "P5") throw std::runtime_error("not a PGM image");
  PixelGrid g;
  g.width = std::stoul(token());
  g.height = std::stoul(token());
  unsigned long maxval = std::stoul(token());
  if (g.width == 0 || g.height == 0 || maxval == 0 || maxval > 255) throw std::runtime_error("unsupported PGM");
  g.intensity.resize(g.size());
  if (magic == "P2") {
    for (auto& p : g.intensity) {
      unsigned long v = std::stoul(token());
      if (v > maxval) throw std::runtime_error("PGM value above maxval");
      p = static_cast<std::uint8_t>(v);
    }
  } else {
    in.get();
    for (auto& p : g.intensity) {
      int c = in.get();
      if (c == EOF) throw std::runtime_error("truncated PGM data");
      p = static_cast<std::uint8_t>(c);
    }
  }
  return g;
}

/// round(256 / (1 + |Δintensity|)), half up, in integers.
inline Order pixel_weight(std::uint8_t p, std::uint8_t q) {
  Order d = 1 + std::abs(static_cast<int>(p) - static_cast<int>(q));
  return (512 + d) / (2 * d);
}

/// Sum of pixel_weight over grid-adjacent pairs split by the bipartition.
inline OrderFunction grid_cost(const PixelGrid& g) {
  struct Pair {
    std::size_t p, q;
    Order w;
  };
  std::vector<Pair> pairs;
  for (std::size_t y = 0; y < g.height; ++y) {
    for (std::size_t x = 0; x < g.width; ++x) {
      std::size_t i = y * g.width + x;
      if (x + 1 < g.width) pairs.push_back({i, i + 1, pixel_weight(g.at(x, y), g.at(x + 1, y))});
      if (y + 1 < g.height) pairs.push_back({i, i + g.width, pixel_weight(g.at(x, y), g.at(x, y + 1))});
    }
  }
  return [pairs](const Separation& s) {
    Order cost = 0;
    for (const Pair& e : pairs) {
      if (s.a.contains(e.p) != s.a.contains(e.q)) cost += e.w;
    }
    return cost;
  };
}

inline constexpr std::size_t kDefaultMaxPixels = 16;

/// A tangle of the pixel bipartitions, or the laminar set of bipartitions
/// labelling an S_k-tree over F*.
struct ClusterVerdict {
  DualityVerdict verdict;
  std::vector<Separation> laminar;  // one orientation per bipartition, sorted

  bool has_tangle() const { return verdict.has_tangle(); }
};

/// Runs the duality for the grid cost at threshold k (on the scaled axis).
inline ClusterVerdict cluster(const PixelGrid& g, Order k, std::size_t max_pixels = kDefaultMaxPixels,
                              std::size_t max_nodes = kDefaultMaxNodes) {
  if (g.size() > max_pixels) throw std::length_error("image exceeds the pixel cap");
  if (g.size() < 2) throw std::invalid_argument("image needs at least two pixels");
  OrderFunction cost = grid_cost(g);
  BipartitionUniverse universe(g.size(), cost);
  SeparationSystem system = restrict_sk(universe, k);
  ClusterVerdict out{verify_duality(system, family_Fstar_setsep(g.size(), cost, k), k, max_nodes), {}};
  if (out.verdict.tree) {
    std::vector<Separation> labels;
    for (const OrientedEdge& e : out.verdict.tree->oriented_edges()) labels.push_back(out.verdict.tree->alpha(e).canonical());
    out.laminar = normalized(labels);
    for (const Separation& r : out.laminar) {
      for (const Separation& s : out.laminar) {
        if (!nested(r, s)) throw DualityViolation("tree labels are not nested");
      }
    }
  }
  return out;
}

}  // namespace tangles
