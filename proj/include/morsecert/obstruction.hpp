#pragma once

#include <cstdint>
#include <optional>

#include "morsecert/cycles.hpp"
#include "morsecert/graph.hpp"

namespace morsecert {

struct GluedFourCycle {
  Cycle four_cycle;
  /// A pair of vertices of the long cycle, non-adjacent in the graph, that
  /// lies on the 4-cycle (as one of its diagonals).
  VertexSet shared_pair;
};

/// First induced 4-cycle (canonical order) containing two vertices of `c`
/// that are non-adjacent in g. Throws InvalidArgument unless `c` is an
/// induced cycle of g of length at least 5.
std::optional<GluedFourCycle> has_glued_four_cycle(SimplicialGraph const& g,
                                                   Cycle const& c);

/// Shortest, then lexicographically least, induced cycle of length >= 5
/// without a glued 4-cycle. Its presence certifies a circle in the Morse
/// boundary of the right-angled Coxeter group; its absence certifies nothing.
std::optional<Cycle> find_circle_obstruction(SimplicialGraph const& g,
                                             std::uint64_t budget = kDefaultCycleBudget);

/// Same search over a precomputed list of induced cycles (any order).
std::optional<Cycle> find_circle_obstruction_in(SimplicialGraph const& g,
                                                std::vector<Cycle> const& long_cycles);

}  // namespace morsecert
