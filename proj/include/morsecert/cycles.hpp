#pragma once

#include <cstdint>
#include <vector>

#include "morsecert/graph.hpp"

namespace morsecert {

inline constexpr std::uint64_t kDefaultCycleBudget = 1'000'000;

/// All induced (chordless) cycles of g[within] with at least `min_length`
/// vertices, each once, in canonical form, sorted shortest first and then
/// lexicographically. Throws BudgetExceeded once more than `budget` cycles
/// (of any length >= 3) have been enumerated.
std::vector<Cycle> induced_cycles_at_least(SimplicialGraph const& g, int min_length,
                                           std::uint64_t budget = kDefaultCycleBudget);
std::vector<Cycle> induced_cycles_at_least(SimplicialGraph const& g, VertexSet within,
                                           int min_length,
                                           std::uint64_t budget = kDefaultCycleBudget);

/// Cycles whose smallest vertex is `start`, unsorted. The unit of work
/// shared by the serial and parallel enumerators. `counter` is incremented
/// once per enumerated cycle; enumeration stops (returning false) when it
/// exceeds `budget`.
bool induced_cycles_from(SimplicialGraph const& g, VertexSet within, Vertex start,
                         int min_length, std::vector<Cycle>& out,
                         std::uint64_t& counter, std::uint64_t budget);

/// Induced 4-cycles of g[within], canonical order.
std::vector<Cycle> induced_four_cycles(SimplicialGraph const& g, VertexSet within);
inline std::vector<Cycle> induced_four_cycles(SimplicialGraph const& g) {
  return induced_four_cycles(g, g.vertices());
}

}  // namespace morsecert
