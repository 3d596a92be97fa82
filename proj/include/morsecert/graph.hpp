#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace morsecert {

using Vertex = int;

inline constexpr int kMaxVertices = 64;

/// Subset of a graph's vertices, stored as a bitmask over the canonical
/// vertex order. Bit i is vertex i.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) {}

  static constexpr VertexSet all(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) {
    return VertexSet(std::uint64_t{1} << v);
  }
  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return _bits; }
  constexpr bool empty() const { return _bits == 0; }
  constexpr int size() const { return std::popcount(_bits); }
  constexpr bool contains(Vertex v) const { return (_bits >> v) & 1U; }
  constexpr Vertex first() const { return std::countr_zero(_bits); }

  constexpr void insert(Vertex v) { _bits |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { _bits &= ~(std::uint64_t{1} << v); }

  constexpr bool subset_of(VertexSet o) const { return (_bits & ~o._bits) == 0; }
  constexpr bool intersects(VertexSet o) const { return (_bits & o._bits) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(_bits | o._bits); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(_bits & o._bits); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(_bits & ~o._bits); }
  constexpr VertexSet& operator|=(VertexSet o) { _bits |= o._bits; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { _bits &= o._bits; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { _bits &= ~o._bits; return *this; }

  constexpr bool operator==(VertexSet const&) const = default;

  /// Members in increasing order.
  std::vector<Vertex> members() const;

  /// Iteration over members in increasing order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t b) : _b(b) {}
    constexpr Vertex operator*() const { return std::countr_zero(_b); }
    constexpr iterator& operator++() { _b &= _b - 1; return *this; }
    constexpr bool operator!=(iterator const& o) const { return _b != o._b; }
   private:
    std::uint64_t _b;
  };
  constexpr iterator begin() const { return iterator(_bits); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t _bits = 0;
};

/// Canonical total order on vertex sets used for deterministic search:
/// smaller sets first, then lexicographic on the sorted member lists.
bool canonical_less(VertexSet a, VertexSet b);

/// Finite simplicial graph with string-labelled vertices. Vertices are kept
/// in lexicographic label order; vertex i is the i-th smallest label.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  /// Builds a graph from labels and label pairs. Labels are sorted and
  /// must be distinct; every edge must join two distinct listed labels.
  /// Duplicate edges are merged. Throws InvalidArgument otherwise.
  SimplicialGraph(std::vector<std::string> labels,
                  std::vector<std::pair<std::string, std::string>> const& edges);

  /// Graph on vertex labels 0..n-1 given as strings, from index pairs
  /// referring to the sorted label order.
  static SimplicialGraph from_indices(std::vector<std::string> sorted_labels,
                                      std::span<std::pair<Vertex, Vertex> const> edges);

  int size() const { return static_cast<int>(_labels.size()); }
  VertexSet vertices() const { return VertexSet::all(size()); }
  std::string const& label(Vertex v) const { return _labels[v]; }
  std::vector<std::string> const& labels() const { return _labels; }
  std::optional<Vertex> find(std::string_view label) const;
  /// Like find, but throws InvalidArgument for an unknown label.
  Vertex index_of(std::string_view label) const;

  bool adjacent(Vertex u, Vertex v) const { return _adj[u].contains(v); }
  VertexSet neighbors(Vertex v) const { return _adj[v]; }

  /// Edges (u, v), u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  int edge_count() const;
  int edge_count(VertexSet within) const;

  VertexSet set_of(std::span<std::string const> labels) const;
  std::vector<std::string> labels_of(VertexSet s) const;

  bool operator==(SimplicialGraph const&) const = default;

 private:
  std::vector<std::string> _labels;
  std::vector<VertexSet> _adj;
};

/// Cyclically ordered vertices of a cycle in canonical form: starts at its
/// smallest vertex, second vertex smaller than the last.
struct Cycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  VertexSet support() const;
  bool operator==(Cycle const&) const = default;
  /// Shorter first, then lexicographic on the vertex sequence.
  bool operator<(Cycle const& o) const;
};

/// Rotates/reflects a cyclic vertex sequence into canonical form.
Cycle canonical_cycle(std::vector<Vertex> vs);

/// Partition of a graph (or induced subgraph) into two sides with every
/// cross pair adjacent.
struct JoinWitness {
  VertexSet side_a;
  VertexSet side_b;
  bool nontrivial = false;

  bool operator==(JoinWitness const&) const = default;
};

/// Suspension witness: g = {x, y} * K with x, y non-adjacent, K a clique.
struct SuspensionWitness {
  VertexSet pair;
  VertexSet clique;

  bool operator==(SuspensionWitness const&) const = default;
};

// Whole-graph operations. Set-valued overloads act on the induced subgraph
// spanned by `within` without materializing it.

SimplicialGraph induced_subgraph(SimplicialGraph const& g, VertexSet s);
SimplicialGraph complement(SimplicialGraph const& g);

bool is_clique(SimplicialGraph const& g);
bool is_clique(SimplicialGraph const& g, VertexSet within);
bool is_edgeless(SimplicialGraph const& g, VertexSet within);
bool is_connected(SimplicialGraph const& g, VertexSet within);
bool is_tree(SimplicialGraph const& g, VertexSet within);
bool has_triangle(SimplicialGraph const& g, VertexSet within);

/// Connected components of g[within], ordered by smallest member.
std::vector<VertexSet> components(SimplicialGraph const& g, VertexSet within);
/// Connected components of the complement of g[within], same order.
std::vector<VertexSet> complement_components(SimplicialGraph const& g,
                                             VertexSet within);

/// Join decomposition of g[within], preferring a non-trivial one. Side A
/// holds the smallest vertex. Absent when g[within] is not a join of two
/// non-empty graphs. Throws InvalidArgument for fewer than two vertices.
std::optional<JoinWitness> join_split(SimplicialGraph const& g);
std::optional<JoinWitness> join_split(SimplicialGraph const& g, VertexSet within);

/// True iff g[within] is a non-trivial join.
bool is_nontrivial_join(SimplicialGraph const& g, VertexSet within);

std::optional<SuspensionWitness> is_suspension_of_clique(SimplicialGraph const& g);

/// True iff both sides are non-empty, disjoint, cover `within`, and every
/// cross pair is adjacent. `nontrivial` is checked separately.
bool is_join_partition(SimplicialGraph const& g, VertexSet within, VertexSet a,
                       VertexSet b);

bool is_induced_cycle(SimplicialGraph const& g, std::span<Vertex const> cycle);

}  // namespace morsecert
