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

// Command-line front end: widths, tangles, S-trees, duality verdicts and
// image clustering.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tangles.hpp"
#include "tangles/io.hpp"

namespace {

using nlohmann::json;
using namespace tangles;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

constexpr std::size_t kMaxGraphVertices = 8;

struct Options {
  std::string format = "text";
  std::string out;
  std::size_t max_nodes = kDefaultMaxNodes;
  std::uint64_t seed = 1;
  bool allow_large = false;
  Order w = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw io::InputError("cannot write " + opt.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

// "random:<n>" draws G(n, 1/2) from --seed; anything else is a file.
Graph load_graph(const std::string& input, const Options& opt) {
  Graph g;
  if (input.rfind("random:", 0) == 0) {
    std::size_t n = 0;
    try {
      n = std::stoul(input.substr(7));
    } catch (const std::exception&) {
      throw io::InputError("bad random graph input " + input);
    }
    if (n > 64) throw io::InputError("random graph too large");
    std::mt19937_64 rng(opt.seed);
    std::bernoulli_distribution coin(0.5);
    g = Graph(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
  } else {
    g = io::parse_graph(io::slurp(input));
  }
  if (g.size() == 0) throw io::InputError("graph has no vertices");
  return g;
}

Matroid load_matroid(const std::string& input) { return io::matroid_from_json(io::parse_json(io::slurp(input))); }

void check_size(std::size_t n, std::size_t cap, const Options& opt, const char* what) {
  if (n > cap && !opt.allow_large) {
    throw io::InputError(std::string(what) + " has " + std::to_string(n) + " elements, above the cap of " +
                         std::to_string(cap) + "; pass --allow-large to proceed");
  }
}

// The separation system and family a family name refers to.
struct Instance {
  SeparationSystem system;
  Family family;
};

Instance make_instance(const std::string& name, Order k, const std::string& input, const Options& opt) {
  if (k < 1) throw UsageError("k must be positive");
  if (name == "mtw") {
    Matroid m = load_matroid(input);
    check_size(m.size(), kDefaultMaxPixels, opt, "matroid");
    return {restrict_sk(matroid_universe(m), k), matroid_family_Fk(m, k)};
  }
  Graph g = load_graph(input, opt);
  if (name == "cw" || name == "rw") {
    check_size(g.size(), kDefaultMaxPixels, opt, "graph");
    if (g.size() < 2) throw io::InputError("bipartition families need two vertices");
    OrderFunction order = name == "cw" ? edge_cut_order(g) : rank_order(g);
    return {restrict_sk(BipartitionUniverse(g.size(), order), k), family_Fstar_setsep(g.size(), order, k)};
  }
  check_size(g.size(), kMaxGraphVertices, opt, "graph");
  SeparationSystem system = vertex_separations(g, k);
  if (name == "tw") return {system, family_Fk(g, k)};
  if (name == "pw") return {system, family_Fk2(g, k)};
  if (name == "bw") return {system, family_Tstar(g, k)};
  if (name == "adh") {
    Order w = opt.w == 0 ? k : opt.w;
    if (w < k) throw UsageError("--w must be at least k");
    return {system, family_Fkw(g, k, w)};
  }
  throw UsageError("unknown family " + name);
}

std::string orientation_text(const Orientation& o) {
  std::ostringstream out;
  for (const Separation& s : o.members) out << io::to_json(s).dump() << '\n';
  return out.str();
}

int run_width(const std::string& param, const std::string& input, const Options& opt) {
  int value = 0;
  json cert;
  std::string dot;
  if (param == "mtw") {
    Matroid m = load_matroid(input);
    check_size(m.size(), kDefaultMaxPixels, opt, "matroid");
    auto r = matroid_treewidth(m, opt.max_nodes);
    value = r.value;
    cert = io::to_json(r.certificate);
    dot = io::to_dot(r.certificate.tree, "decomposition");
  } else {
    Graph g = load_graph(input, opt);
    if (param == "tw" || param == "pw") {
      check_size(g.size(), kMaxGraphVertices, opt, "graph");
      auto r = param == "tw" ? treewidth(g, opt.max_nodes) : pathwidth(g, opt.max_nodes);
      value = r.value;
      cert = io::to_json(*r.certificate);
      dot = io::to_dot(*r.certificate);
    } else if (param == "bw") {
      check_size(g.size(), kMaxGraphVertices, opt, "graph");
      auto r = branchwidth(g, opt.max_nodes);
      value = r.value;
      if (r.certificate) {
        cert = io::to_json(*r.certificate);
        dot = io::to_dot(g, *r.certificate);
      }
    } else if (param == "cw" || param == "rw") {
      check_size(g.size(), kDefaultMaxPixels, opt, "graph");
      if (g.size() < 2) throw io::InputError("carving and rank-width need two vertices");
      auto r = param == "cw" ? carving_width(g, opt.max_nodes) : rank_width(g, opt.max_nodes);
      value = r.value;
      cert = io::to_json(r.certificate);
      dot = io::to_dot(r.certificate);
    } else {
      throw UsageError("unknown width parameter " + param);
    }
  }
  if (opt.format == "json") {
    json j = {{"parameter", param}, {"value", value}};
    if (!cert.is_null()) j["certificate"] = cert;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << value << '\n';
  }
  if (!opt.out.empty()) {
    Options file = opt;
    emit(file, opt.format == "dot" ? dot : (cert.is_null() ? std::string("null") : cert.dump(2)));
  } else if (opt.format == "dot" && !dot.empty()) {
    std::cout << dot;
  }
  return kExitOk;
}

int run_tangle(const std::string& name, Order k, const std::string& input, const Options& opt) {
  Instance inst = make_instance(name, k, input, opt);
  auto tangle = find_tangle(inst.system, inst.family);
  if (opt.format == "json") {
    json j = {{"outcome", tangle ? "tangle" : "none"}, {"family", inst.family.name}, {"k", k}};
    if (tangle) j["tangle"] = io::to_json(*tangle);
    emit(opt, j.dump(2));
  } else {
    emit(opt, tangle ? "tangle\n" + orientation_text(*tangle) : std::string("none"));
  }
  return kExitOk;
}

int run_tree(const std::string& name, Order k, const std::string& input, const Options& opt) {
  Instance inst = make_instance(name, k, input, opt);
  auto tree = find_stree(inst.system, inst.family, opt.max_nodes);
  if (!tree) {
    emit(opt, opt.format == "json" ? json{{"outcome", "none"}, {"family", inst.family.name}, {"k", k}}.dump(2)
                                   : std::string("none"));
  } else if (opt.format == "dot") {
    emit(opt, io::to_dot(*tree));
  } else if (opt.format == "json") {
    emit(opt, io::to_json(*tree).dump(2));
  } else {
    emit(opt, "tree with " + std::to_string(tree->node_count()) + " nodes\n" + io::to_dot(*tree));
  }
  return kExitOk;
}

int run_duality(const std::string& name, Order k, const std::string& input, const Options& opt) {
  Instance inst = make_instance(name, k, input, opt);
  DualityVerdict v = verify_duality(inst.system, inst.family, k, opt.max_nodes);
  if (opt.format == "json") emit(opt, io::to_json(v).dump(2));
  else if (opt.format == "dot" && v.tree) emit(opt, io::to_dot(*v.tree));
  else emit(opt, v.outcome());
  return kExitOk;
}

int run_cluster(const std::string& image, Order k, const Options& opt) {
  std::ifstream in(image, std::ios::binary);
  if (!in) throw io::InputError("cannot open " + image);
  PixelGrid grid;
  try {
    grid = read_pgm(in);
  } catch (const std::runtime_error& e) {
    throw io::InputError(e.what());
  }
  std::size_t cap = opt.allow_large ? 64 : kDefaultMaxPixels;
  if (grid.size() > cap) check_size(grid.size(), cap, opt, "image");
  if (grid.size() < 2) throw io::InputError("image needs two pixels");
  ClusterVerdict c = cluster(grid, k, cap, opt.max_nodes);
  if (opt.format == "json") {
    json j = io::to_json(c.verdict);
    json lines = json::array();
    for (const Separation& s : c.laminar) lines.push_back(io::to_json(s));
    j["laminar"] = lines;
    emit(opt, j.dump(2));
  } else if (opt.format == "dot" && c.verdict.tree) {
    emit(opt, io::to_dot(*c.verdict.tree));
  } else {
    std::ostringstream out;
    out << c.verdict.outcome() << '\n';
    if (c.has_tangle()) out << orientation_text(*c.verdict.tangle);
    for (const Separation& s : c.laminar) out << io::to_json(s).dump() << '\n';
    emit(opt, out.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tangle-tree duality toolkit"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--out", opt.out, "Write output to this file");
    sub->add_option("--max-nodes", opt.max_nodes, "S-tree node cap");
    sub->add_option("--seed", opt.seed, "Seed for random:<n> inputs");
    sub->add_flag("--allow-large", opt.allow_large, "Lift the input size caps (exponential cost)");
  };

  std::string param, family, input, image;
  Order k = 0;

  auto* width = app.add_subcommand("width", "Compute a width parameter and its certificate");
  width->add_option("parameter", param)->required()->check(CLI::IsMember({"tw", "pw", "bw", "cw", "rw", "mtw"}));
  width->add_option("input", input)->required();
  add_common(width);

  const auto families = CLI::IsMember({"tw", "pw", "bw", "adh", "cw", "rw", "mtw"});
  std::vector<CLI::App*> searches;
  for (const char* name : {"tangle", "tree", "duality"}) {
    auto* sub = app.add_subcommand(name, std::string("Run the ") + name + " search for a family");
    sub->add_option("family", family)->required()->check(families);
    sub->add_option("k", k)->required();
    sub->add_option("input", input)->required();
    sub->add_option("--w", opt.w, "Bound w for the adh family (default k)");
    add_common(sub);
    searches.push_back(sub);
  }

  auto* clus = app.add_subcommand("cluster", "Tangle clustering of a PGM image");
  clus->add_option("image", image)->required();
  clus->add_option("k", k)->required();
  add_common(clus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (width->parsed()) return run_width(param, input, opt);
    if (searches[0]->parsed()) return run_tangle(family, k, input, opt);
    if (searches[1]->parsed()) return run_tree(family, k, input, opt);
    if (searches[2]->parsed()) return run_duality(family, k, input, opt);
    if (clus->parsed()) return run_cluster(image, k, opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SearchCapExceeded& e) {
    std::cerr << "search cap exceeded: " << e.what() << " (raise --max-nodes)\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
