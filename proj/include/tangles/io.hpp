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

#include <cctype>
#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "duality.hpp"
#include "graph.hpp"
#include "graph_decompositions.hpp"
#include "matroid.hpp"
#include "stree.hpp"

namespace tangles::io {

using nlohmann::json;

/// Malformed input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json set_to_json(ElementSet x) { return x.to_vector(); }

inline ElementSet set_from_json(const json& j) {
  ElementSet x;
  for (const auto& v : j) {
    std::size_t e = v.get<std::size_t>();
    if (e >= 64) throw InputError("element index out of range");
    x.insert(e);
  }
  return x;
}

// -- graphs -----------------------------------------------------------------

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.size()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  try {
    Graph g(j.at("n").get<std::size_t>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    return g;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad graph JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad graph: ") + e.what());
  }
}

/// Lines "u v" add an edge, a lone "v" declares a vertex; '#' starts a comment.
inline Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    std::vector<long long> nums;
    long long x;
    while (ls >> x) nums.push_back(x);
    if (!ls.eof()) throw InputError("bad edge-list line: " + line);
    if (nums.empty()) continue;
    if (nums.size() > 2) throw InputError("bad edge-list line: " + line);
    for (long long v : nums) {
      if (v < 0) throw InputError("negative vertex");
      n = std::max(n, static_cast<std::size_t>(v) + 1);
    }
    if (nums.size() == 2) edges.emplace_back(nums[0], nums[1]);
  }
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad graph: ") + e.what());
  }
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
}

/// JSON if the text starts with '{', else an edge list.
inline Graph parse_graph(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') return graph_from_json(parse_json(text));
  std::istringstream in(text);
  return parse_edge_list(in);
}

// -- separations and orientations -------------------------------------------

inline json to_json(const Separation& s) { return {{"a", set_to_json(s.a)}, {"b", set_to_json(s.b)}}; }

inline Separation separation_from_json(const json& j) {
  try {
    return {set_from_json(j.at("a")), set_from_json(j.at("b"))};
  } catch (const json::exception& e) {
    throw InputError(std::string("bad separation JSON: ") + e.what());
  }
}

inline json to_json(const Orientation& o) {
  json seps = json::array();
  for (const Separation& s : o.members) seps.push_back(to_json(s));
  return {{"separations", seps}};
}

inline Orientation orientation_from_json(const json& j) {
  std::vector<Separation> members;
  try {
    for (const auto& s : j.at("separations")) members.push_back(separation_from_json(s));
  } catch (const json::exception& e) {
    throw InputError(std::string("bad orientation JSON: ") + e.what());
  }
  return Orientation(std::move(members));
}

// -- trees ------------------------------------------------------------------

inline json to_json(const STree& s) {
  json edges = json::array();
  for (std::size_t i = 0; i < s.edge_count(); ++i) {
    OrientedEdge e = s.tree().edge(i);
    Separation l = s.alpha(e);
    edges.push_back({{"from", e.from}, {"to", e.to}, {"a", set_to_json(l.a)}, {"b", set_to_json(l.b)}});
  }
  return {{"nodes", s.node_count()}, {"edges", edges}};
}

inline STree stree_from_json(const json& j) {
  try {
    STree s;
    std::size_t n = j.at("nodes").get<std::size_t>();
    if (n == 0) throw InputError("S-tree needs a node");
    for (std::size_t t = 1; t < n; ++t) s.add_node();
    for (const auto& e : j.at("edges")) {
      s.add_edge(e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>(),
                 Separation{set_from_json(e.at("a")), set_from_json(e.at("b"))});
    }
    if (!s.tree().is_tree()) throw InputError("S-tree edges do not form a tree");
    return s;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad S-tree JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad S-tree: ") + e.what());
  }
}

inline json tree_edges_json(const DecorationTree& t) {
  json edges = json::array();
  for (std::size_t i = 0; i < t.edge_count(); ++i) edges.push_back({t.edge(i).from, t.edge(i).to});
  return edges;
}

inline json to_json(const TreeDecomposition& td) {
  json bags = json::array();
  for (ElementSet b : td.bags) bags.push_back(set_to_json(b));
  return {{"nodes", td.tree.node_count()}, {"edges", tree_edges_json(td.tree)}, {"bags", bags}};
}

inline json to_json(const BranchDecomposition& bd) {
  return {{"nodes", bd.tree.node_count()}, {"edges", tree_edges_json(bd.tree)}, {"leaf_of_edge", bd.leaf_of_edge}};
}

inline json to_json(const MatroidTreeDecomposition& td) {
  return {{"nodes", td.tree.node_count()}, {"edges", tree_edges_json(td.tree)}, {"tau", td.tau}};
}

// -- matroids ---------------------------------------------------------------

inline json to_json(const Matroid& m) {
  switch (m.kind()) {
    case Matroid::Kind::graphic:
      return {{"kind", "graphic"}, {"graph", to_json(m.graph())}};
    case Matroid::Kind::gf2: {
      json cols = json::array();
      for (std::uint64_t c : m.columns()) {
        json bits = json::array();
        for (std::size_t i = 0; i < 64 && (c >> i) != 0; ++i) bits.push_back((c >> i) & 1U);
        cols.push_back(bits);
      }
      return {{"kind", "gf2"}, {"columns", cols}};
    }
    case Matroid::Kind::uniform:
      return {{"kind", "uniform"}, {"r", m.uniform_rank()}, {"n", m.size()}};
  }
  return {};
}

/// {"kind":"graphic","graph":{...}} | {"kind":"gf2","columns":[[bits]...]} |
/// {"kind":"uniform","r":r,"n":n}. A gf2 column lists its entries top down.
inline Matroid matroid_from_json(const json& j) {
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "graphic") return Matroid::graphic(graph_from_json(j.at("graph")));
    if (kind == "uniform") return Matroid::uniform(j.at("r").get<std::size_t>(), j.at("n").get<std::size_t>());
    if (kind == "gf2") {
      std::vector<std::uint64_t> cols;
      for (const auto& col : j.at("columns")) {
        if (col.size() > 64) throw InputError("gf2 column too long");
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < col.size(); ++i) {
          int bit = col[i].get<int>();
          if (bit != 0 && bit != 1) throw InputError("gf2 entries must be 0 or 1");
          c |= static_cast<std::uint64_t>(bit) << i;
        }
        cols.push_back(c);
      }
      return Matroid::gf2(std::move(cols));
    }
    throw InputError("unknown matroid kind " + kind);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad matroid JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad matroid: ") + e.what());
  }
}

// -- verdicts ---------------------------------------------------------------

inline json to_json(const DualityVerdict& v) {
  json j = {{"outcome", v.outcome()}, {"family", v.family}, {"k", v.k}};
  if (v.tangle) j["tangle"] = to_json(*v.tangle);
  if (v.tree) j["tree"] = to_json(*v.tree);
  return j;
}

// -- DOT --------------------------------------------------------------------

/// Edge x -> y carries the sizes of A, B and A∩B for (A,B) = alpha(x,y).
inline std::string to_dot(const STree& s) {
  std::ostringstream out;
  out << "digraph stree {\n";
  for (std::size_t t = 0; t < s.node_count(); ++t) out << "  " << t << " [label=\"" << t << "\"];\n";
  for (std::size_t i = 0; i < s.edge_count(); ++i) {
    OrientedEdge e = s.tree().edge(i);
    Separation l = s.alpha(e);
    out << "  " << e.from << " -> " << e.to << " [label=\"|A|=" << l.a.size() << " |B|=" << l.b.size()
        << " |A∩B|=" << l.separator().size() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const TreeDecomposition& td) {
  std::ostringstream out;
  out << "graph treedecomposition {\n";
  for (std::size_t t = 0; t < td.bags.size(); ++t) {
    out << "  " << t << " [label=\"";
    bool first = true;
    for (std::size_t v : td.bags[t].to_vector()) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << "\"];\n";
  }
  for (std::size_t i = 0; i < td.tree.edge_count(); ++i) {
    auto e = td.tree.edge(i);
    out << "  " << e.from << " -- " << e.to << " [label=\"" << (td.bags[e.from] & td.bags[e.to]).size() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const DecorationTree& t, const std::string& name = "tree") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t x = 0; x < t.node_count(); ++x) out << "  " << x << ";\n";
  for (std::size_t i = 0; i < t.edge_count(); ++i) out << "  " << t.edge(i).from << " -- " << t.edge(i).to << ";\n";
  out << "}\n";
  return out.str();
}

/// Leaves are labelled with the graph edge they carry.
inline std::string to_dot(const Graph& g, const BranchDecomposition& bd) {
  std::vector<std::string> label(bd.tree.node_count());
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    label[bd.leaf_of_edge[i]] = std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  }
  std::ostringstream out;
  out << "graph branchdecomposition {\n";
  for (std::size_t x = 0; x < label.size(); ++x) {
    out << "  " << x;
    if (!label[x].empty()) out << " [label=\"" << label[x] << "\"]";
    out << ";\n";
  }
  for (std::size_t i = 0; i < bd.tree.edge_count(); ++i) out << "  " << bd.tree.edge(i).from << " -- " << bd.tree.edge(i).to << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tangles::io
