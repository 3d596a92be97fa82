#include "morsecert/obstruction.hpp"

#include <algorithm>

#include "morsecert/errors.hpp"

namespace morsecert {

namespace {

std::optional<GluedFourCycle> glued_among(VertexSet cycle,
                                          std::vector<Cycle> const& four_cycles) {
  for (auto const& q : four_cycles) {
    // The diagonals of q = (a, x, b, y) are {a, b} and {x, y}.
    auto const& v = q.vertices;
    for (VertexSet diag : {VertexSet::of({v[0], v[2]}), VertexSet::of({v[1], v[3]})}) {
      if (diag.subset_of(cycle)) return GluedFourCycle{q, diag};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<GluedFourCycle> has_glued_four_cycle(SimplicialGraph const& g,
                                                   Cycle const& c) {
  if (c.length() < 5) throw InvalidArgument("cycle must have length at least 5");
  if (!is_induced_cycle(g, c.vertices)) {
    throw InvalidArgument("not an induced cycle of the graph");
  }
  return glued_among(c.support(), induced_four_cycles(g));
}

std::optional<Cycle> find_circle_obstruction_in(SimplicialGraph const& g,
                                                std::vector<Cycle> const& long_cycles) {
  std::vector<Cycle const*> order;
  for (auto const& c : long_cycles) {
    if (c.length() >= 5) order.push_back(&c);
  }
  std::sort(order.begin(), order.end(), [](auto a, auto b) { return *a < *b; });
  auto fours = induced_four_cycles(g);
  for (auto const* c : order) {
    if (!glued_among(c->support(), fours)) return *c;
  }
  return std::nullopt;
}

std::optional<Cycle> find_circle_obstruction(SimplicialGraph const& g,
                                             std::uint64_t budget) {
  return find_circle_obstruction_in(g, induced_cycles_at_least(g, 5, budget));
}

}  // namespace morsecert
