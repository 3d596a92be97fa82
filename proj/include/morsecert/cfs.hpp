#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "morsecert/graph.hpp"

namespace morsecert {

/// The four-cycle graph: one node per induced 4-cycle of the base graph,
/// two nodes linked when their 4-cycles share a pair of vertices that is
/// non-adjacent in the base graph.
struct FourCycleGraph {
  std::vector<Cycle> nodes;
  std::vector<std::pair<int, int>> links;  // i < j, sorted

  VertexSet support_of(int node) const { return nodes[node].support(); }
  /// Node indices of each connected component, ordered by smallest node.
  std::vector<std::vector<int>> components() const;
  VertexSet support(std::vector<int> const& nodes) const;
};

FourCycleGraph four_cycle_graph(SimplicialGraph const& g);

/// {nodes: [[labels]...], links: [[i, j]...], components: [{nodes, support}]}
nlohmann::json four_cycle_graph_to_json(SimplicialGraph const& g, FourCycleGraph const& q);
std::string four_cycle_graph_to_dot(SimplicialGraph const& g, FourCycleGraph const& q);

/// Universal vertices (adjacent to every other vertex). They form a clique
/// and no induced 4-cycle passes through them.
VertexSet universal_vertices(SimplicialGraph const& g);

/// g = Gamma * K with K the clique of universal vertices, Gamma non-empty, and
/// some component of the four-cycle graph of Gamma supported on all of Gamma.
bool is_cfs(SimplicialGraph const& g);

bool is_planar(SimplicialGraph const& g);

std::optional<Vertex> find_cut_vertex(SimplicialGraph const& g);
std::optional<std::pair<Vertex, Vertex>> find_bridge(SimplicialGraph const& g);

struct Cfs0Result {
  bool member = false;
  /// First failing clause; empty when `member`.
  std::string reason;
};

/// Clauses in order: CFS, connected, triangle-free, planar, at least five
/// vertices, no cut vertex, no bridge.
Cfs0Result is_cfs0(SimplicialGraph const& g);

namespace cfs_reason {
inline constexpr char const* kNotCfs = "not CFS";
inline constexpr char const* kDisconnected = "not connected";
inline constexpr char const* kTriangle = "contains a triangle";
inline constexpr char const* kNonPlanar = "not planar";
inline constexpr char const* kTooSmall = "fewer than 5 vertices";
inline constexpr char const* kCutVertex = "has a separating vertex";
inline constexpr char const* kBridge = "has a separating edge";
}  // namespace cfs_reason

}  // namespace morsecert
