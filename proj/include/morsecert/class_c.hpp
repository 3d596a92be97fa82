#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "morsecert/certificate.hpp"
#include "morsecert/cycles.hpp"
#include "morsecert/graph.hpp"

namespace morsecert {

inline constexpr std::uint64_t kDefaultSplitBudget = 20'000'000;

struct DecideOptions {
  /// Upper bound on split candidates (intersection sets plus component
  /// groupings) examined over the whole search. Exceeding it throws
  /// BudgetExceeded rather than reporting a refutation.
  std::uint64_t split_budget = kDefaultSplitBudget;
  std::uint64_t cycle_budget = kDefaultCycleBudget;
};

/// Smallest (then lexicographically least) vertex set U with
/// lambda ⊆ U ⊆ within such that g[U] is a non-trivial join, returned as
/// the join of g[U]. With `proper`, U = within is not allowed.
///
/// Such a U exists iff lambda ∪ Q works for some induced 4-cycle Q: a
/// non-edge on each side of any join containing lambda spans a 4-cycle.
std::optional<JoinWitness> contained_in_nontrivial_join(SimplicialGraph const& g,
                                                        VertexSet lambda);
std::optional<JoinWitness> contained_in_nontrivial_join(SimplicialGraph const& g,
                                                        VertexSet within,
                                                        VertexSet lambda,
                                                        bool proper = false);

/// Charney–Sultan decomposition of a connected graph: an induced cycle of
/// length >= 5 and an induced non-trivial join, both proper, covering all
/// vertices and edges, where the join holds two cycle vertices that are not
/// adjacent. Cycles are tried in canonical order; for each, the join must
/// contain every vertex off the cycle and their neighbours.
/// Throws InvalidArgument when g[within] is disconnected.
std::optional<CharneySultanWitness> is_charney_sultan(
    SimplicialGraph const& g, std::uint64_t cycle_budget = kDefaultCycleBudget);
std::optional<CharneySultanWitness> is_charney_sultan(
    SimplicialGraph const& g, VertexSet within,
    std::uint64_t cycle_budget = kDefaultCycleBudget);

using AdmissibleSplit = SplitWitness;

/// Visits the admissible splits of g[within] in canonical order: the
/// intersection lambda by size then lexicographically, then the grouping
/// of the components of g[within - lambda] into the two sides. Unordered:
/// lambda1 always holds the component with the smallest vertex. Stops
/// early when `visit` returns false.
void for_each_admissible_split(SimplicialGraph const& g, VertexSet within,
                               std::function<bool(AdmissibleSplit const&)> const& visit);
std::vector<AdmissibleSplit> admissible_splits(SimplicialGraph const& g);

Certificate decide_class_c(SimplicialGraph const& g, DecideOptions const& opts = {});
Certificate decide_class_c_prime(SimplicialGraph const& g, DecideOptions const& opts = {});
Certificate decide(SimplicialGraph const& g, GraphClass cls, DecideOptions const& opts = {});

}  // namespace morsecert
