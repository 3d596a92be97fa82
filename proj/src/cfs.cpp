#include "morsecert/cfs.hpp"

#include <algorithm>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "morsecert/cycles.hpp"
#include "morsecert/graph_io.hpp"

namespace morsecert {

namespace {

// The shared pair must be a diagonal of both 4-cycles: any pair of a
// 4-cycle that is non-adjacent in the base graph is one of its diagonals.
bool share_nonadjacent_pair(SimplicialGraph const& g, Cycle const& a, Cycle const& b) {
  VertexSet common = a.support() & b.support();
  for (Vertex u : common) {
    for (Vertex v : common) {
      if (v > u && !g.adjacent(u, v)) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> FourCycleGraph::components() const {
  int n = static_cast<int>(nodes.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [i, j] : links) parent[find(i)] = find(j);
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

VertexSet FourCycleGraph::support(std::vector<int> const& ns) const {
  VertexSet s;
  for (int i : ns) s |= support_of(i);
  return s;
}

FourCycleGraph four_cycle_graph(SimplicialGraph const& g) {
  FourCycleGraph out;
  out.nodes = induced_four_cycles(g);
  int n = static_cast<int>(out.nodes.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (share_nonadjacent_pair(g, out.nodes[i], out.nodes[j])) out.links.emplace_back(i, j);
    }
  }
  return out;
}

VertexSet universal_vertices(SimplicialGraph const& g) {
  VertexSet u;
  VertexSet all = g.vertices();
  for (Vertex v = 0; v < g.size(); ++v) {
    if ((all - VertexSet::single(v)).subset_of(g.neighbors(v))) u.insert(v);
  }
  return u;
}

bool is_cfs(SimplicialGraph const& g) {
  VertexSet gamma = g.vertices() - universal_vertices(g);
  if (gamma.empty()) return false;
  // Induced 4-cycles avoid universal vertices, so the four-cycle graph of
  // g and of g[gamma] coincide.
  FourCycleGraph fcg = four_cycle_graph(g);
  for (auto const& comp : fcg.components()) {
    if (fcg.support(comp) == gamma) return true;
  }
  return false;
}

bool is_planar(SimplicialGraph const& g) {
  int n = g.size();
  int m = g.edge_count();
  if (n >= 3 && m > 3 * n - 6) return false;
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(n);
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<Vertex> find_cut_vertex(SimplicialGraph const& g) {
  VertexSet all = g.vertices();
  std::size_t base = components(g, all).size();
  for (Vertex v = 0; v < g.size(); ++v) {
    if (components(g, all - VertexSet::single(v)).size() > base) return v;
  }
  return std::nullopt;
}

std::optional<std::pair<Vertex, Vertex>> find_bridge(SimplicialGraph const& g) {
  // An edge uv is a bridge iff v is unreachable from u once uv is removed.
  VertexSet all = g.vertices();
  for (auto [u, v] : g.edges()) {
    VertexSet seen = VertexSet::single(u);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex x : frontier) {
        VertexSet nb = g.neighbors(x) & all;
        if (x == u) nb.erase(v);
        if (x == v) nb.erase(u);
        next |= nb;
      }
      frontier = next - seen;
      seen |= frontier;
    }
    if (!seen.contains(v)) return std::make_pair(u, v);
  }
  return std::nullopt;
}

Cfs0Result is_cfs0(SimplicialGraph const& g) {
  VertexSet all = g.vertices();
  if (!is_cfs(g)) return {false, cfs_reason::kNotCfs};
  if (!is_connected(g, all)) return {false, cfs_reason::kDisconnected};
  if (has_triangle(g, all)) return {false, cfs_reason::kTriangle};
  if (!is_planar(g)) return {false, cfs_reason::kNonPlanar};
  if (g.size() < 5) return {false, cfs_reason::kTooSmall};
  if (find_cut_vertex(g)) return {false, cfs_reason::kCutVertex};
  if (find_bridge(g)) return {false, cfs_reason::kBridge};
  return {true, {}};
}

nlohmann::json four_cycle_graph_to_json(SimplicialGraph const& g, FourCycleGraph const& q) {
  nlohmann::json nodes = nlohmann::json::array();
  for (auto const& c : q.nodes) {
    nlohmann::json labels = nlohmann::json::array();
    for (Vertex v : c.vertices) labels.push_back(g.label(v));
    nodes.push_back(labels);
  }
  nlohmann::json links = nlohmann::json::array();
  for (auto [i, j] : q.links) links.push_back({i, j});
  nlohmann::json comps = nlohmann::json::array();
  for (auto const& comp : q.components()) {
    comps.push_back({{"nodes", comp}, {"support", labels_json(g, q.support(comp))}});
  }
  return {{"nodes", nodes}, {"links", links}, {"components", comps}};
}

std::string four_cycle_graph_to_dot(SimplicialGraph const& g, FourCycleGraph const& q) {
  std::string out = "graph four_cycles {\n";
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    std::string name;
    for (Vertex v : q.nodes[i].vertices) name += (name.empty() ? "" : " ") + g.label(v);
    out += "  n" + std::to_string(i) + " [label=\"" + name + "\"];\n";
  }
  for (auto [i, j] : q.links) {
    out += "  n" + std::to_string(i) + " -- n" + std::to_string(j) + ";\n";
  }
  return out + "}\n";
}

}  // namespace morsecert
