#include "morsecert/graph.hpp"

#include <algorithm>

#include "morsecert/errors.hpp"

namespace morsecert {

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Equal sizes: compare sorted member lists lexicographically. The first
  // differing vertex decides; whichever set holds the smaller one wins.
  std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  Vertex v = std::countr_zero(diff);
  return a.contains(v);
}

SimplicialGraph::SimplicialGraph(
    std::vector<std::string> labels,
    std::vector<std::pair<std::string, std::string>> const& edges) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw InvalidArgument("duplicate vertex label");
  }
  if (labels.size() > kMaxVertices) {
    throw InvalidArgument("graphs are limited to " +
                          std::to_string(kMaxVertices) + " vertices");
  }
  _labels = std::move(labels);
  _adj.assign(_labels.size(), VertexSet());
  for (auto const& [u, v] : edges) {
    if (u == v) throw InvalidArgument("self-loop at " + u);
    Vertex a = index_of(u);
    Vertex b = index_of(v);
    _adj[a].insert(b);
    _adj[b].insert(a);
  }
}

SimplicialGraph SimplicialGraph::from_indices(
    std::vector<std::string> sorted_labels,
    std::span<std::pair<Vertex, Vertex> const> edges) {
  std::vector<std::pair<std::string, std::string>> named;
  named.reserve(edges.size());
  for (auto [u, v] : edges) named.emplace_back(sorted_labels.at(u), sorted_labels.at(v));
  SimplicialGraph g(sorted_labels, named);
  if (g._labels != sorted_labels) {
    throw InvalidArgument("from_indices: labels are not in canonical order");
  }
  return g;
}

std::optional<Vertex> SimplicialGraph::find(std::string_view label) const {
  auto it = std::lower_bound(_labels.begin(), _labels.end(), label);
  if (it == _labels.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - _labels.begin());
}

Vertex SimplicialGraph::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw InvalidArgument("unknown vertex '" + std::string(label) + "'");
}

std::vector<std::pair<Vertex, Vertex>> SimplicialGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : _adj[u]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

int SimplicialGraph::edge_count() const { return edge_count(vertices()); }

int SimplicialGraph::edge_count(VertexSet within) const {
  int twice = 0;
  for (Vertex v : within) twice += (_adj[v] & within).size();
  return twice / 2;
}

VertexSet SimplicialGraph::set_of(std::span<std::string const> labels) const {
  VertexSet s;
  for (auto const& l : labels) s.insert(index_of(l));
  return s;
}

std::vector<std::string> SimplicialGraph::labels_of(VertexSet s) const {
  std::vector<std::string> out;
  for (Vertex v : s) out.push_back(_labels[v]);
  return out;
}

VertexSet Cycle::support() const {
  VertexSet s;
  for (Vertex v : vertices) s.insert(v);
  return s;
}

bool Cycle::operator<(Cycle const& o) const {
  if (vertices.size() != o.vertices.size()) return vertices.size() < o.vertices.size();
  return vertices < o.vertices;
}

Cycle canonical_cycle(std::vector<Vertex> vs) {
  if (vs.empty()) return {};
  auto smallest = std::min_element(vs.begin(), vs.end());
  std::rotate(vs.begin(), smallest, vs.end());
  if (vs.size() > 2 && vs.back() < vs[1]) std::reverse(vs.begin() + 1, vs.end());
  return Cycle{std::move(vs)};
}

SimplicialGraph induced_subgraph(SimplicialGraph const& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw InvalidArgument("induced_subgraph: vertex set is not contained in the graph");
  }
  std::vector<std::string> labels = g.labels_of(s);
  std::vector<Vertex> old = s.members();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < old.size(); ++i) {
    for (std::size_t j = i + 1; j < old.size(); ++j) {
      if (g.adjacent(old[i], old[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return SimplicialGraph::from_indices(std::move(labels), edges);
}

SimplicialGraph complement(SimplicialGraph const& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return SimplicialGraph::from_indices(g.labels(), edges);
}

bool is_clique(SimplicialGraph const& g) { return is_clique(g, g.vertices()); }

bool is_clique(SimplicialGraph const& g, VertexSet within) {
  for (Vertex v : within) {
    if (!(within - VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_edgeless(SimplicialGraph const& g, VertexSet within) {
  for (Vertex v : within) {
    if (g.neighbors(v).intersects(within)) return false;
  }
  return true;
}

namespace {

VertexSet reach(SimplicialGraph const& g, VertexSet within, Vertex start,
                bool in_complement) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) {
      VertexSet nb = in_complement ? (within - g.neighbors(v) - VertexSet::single(v))
                                   : (g.neighbors(v) & within);
      next |= nb;
    }
    frontier = next - seen;
    seen |= frontier;
  }
  return seen;
}

std::vector<VertexSet> split_components(SimplicialGraph const& g, VertexSet within,
                                        bool in_complement) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet c = reach(g, within, rest.first(), in_complement);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

}  // namespace

std::vector<VertexSet> components(SimplicialGraph const& g, VertexSet within) {
  return split_components(g, within, false);
}

std::vector<VertexSet> complement_components(SimplicialGraph const& g,
                                             VertexSet within) {
  return split_components(g, within, true);
}

bool is_connected(SimplicialGraph const& g, VertexSet within) {
  if (within.empty()) return true;
  return reach(g, within, within.first(), false) == within;
}

bool is_tree(SimplicialGraph const& g, VertexSet within) {
  return !within.empty() && is_connected(g, within) &&
         g.edge_count(within) == within.size() - 1;
}

bool has_triangle(SimplicialGraph const& g, VertexSet within) {
  for (Vertex u : within) {
    for (Vertex v : g.neighbors(u) & within) {
      if (v > u && !(g.neighbors(u) & g.neighbors(v) & within).empty()) {
        return true;
      }
    }
  }
  return false;
}

std::optional<JoinWitness> join_split(SimplicialGraph const& g) {
  return join_split(g, g.vertices());
}

std::optional<JoinWitness> join_split(SimplicialGraph const& g, VertexSet within) {
  if (within.size() < 2) {
    throw InvalidArgument("join_split needs at least two vertices");
  }
  auto comps = complement_components(g, within);
  if (comps.size() < 2) return std::nullopt;
  // comps[0] holds the smallest vertex and always stays on side A. Side B
  // is the last component other than comps[0]; when some component past
  // comps[0] has a non-edge, B is the last such, and A keeps one as well
  // whenever two exist.
  std::size_t big = 0;
  std::size_t last_big = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].size() >= 2) {
      ++big;
      if (i > 0) last_big = i;
    }
  }
  std::size_t b_index = comps.size() - 1;
  bool nontrivial = big >= 2;
  if (nontrivial) b_index = last_big;
  JoinWitness w;
  w.side_b = comps[b_index];
  w.side_a = within - w.side_b;
  w.nontrivial = nontrivial;
  return w;
}

bool is_nontrivial_join(SimplicialGraph const& g, VertexSet within) {
  if (within.size() < 4) return false;
  int big = 0;
  for (VertexSet c : complement_components(g, within)) {
    if (c.size() >= 2) ++big;
  }
  return big >= 2;
}

std::optional<SuspensionWitness> is_suspension_of_clique(SimplicialGraph const& g) {
  VertexSet all = g.vertices();
  for (Vertex x = 0; x < g.size(); ++x) {
    for (Vertex y = x + 1; y < g.size(); ++y) {
      if (g.adjacent(x, y)) continue;
      VertexSet pair = VertexSet::of({x, y});
      VertexSet rest = all - pair;
      if (rest.empty()) continue;
      if (!rest.subset_of(g.neighbors(x)) || !rest.subset_of(g.neighbors(y))) continue;
      if (!is_clique(g, rest)) continue;
      return SuspensionWitness{pair, rest};
    }
  }
  return std::nullopt;
}

bool is_join_partition(SimplicialGraph const& g, VertexSet within, VertexSet a,
                       VertexSet b) {
  if (a.empty() || b.empty() || a.intersects(b) || (a | b) != within) return false;
  for (Vertex v : a) {
    if (!b.subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_induced_cycle(SimplicialGraph const& g, std::span<Vertex const> cycle) {
  int n = static_cast<int>(cycle.size());
  if (n < 3) return false;
  VertexSet s;
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.size() || s.contains(v)) return false;
    s.insert(v);
  }
  for (int i = 0; i < n; ++i) {
    Vertex v = cycle[i];
    VertexSet expected = VertexSet::of({cycle[(i + 1) % n], cycle[(i + n - 1) % n]});
    if ((g.neighbors(v) & s) != expected) return false;
  }
  return true;
}

}  // namespace morsecert
