#pragma once

#include <string_view>
#include <vector>

#include <json.hpp>

#include "morsecert/graph.hpp"
#include "morsecert/words.hpp"

namespace morsecert {

/// Cover of a graph by two proper induced subgraphs containing every edge.
/// The right-angled Coxeter group is then the amalgam of the two side
/// subgroups over the subgroup of the intersection.
struct GraphSplit {
  VertexSet delta1;
  VertexSet delta2;
  VertexSet lambda;
  bool operator==(GraphSplit const&) const = default;
};

/// Builds a split from its two sides. Throws InvalidArgument("invalid
/// split: ...") unless both sides are proper, cover the graph, and every
/// edge lies inside one of them.
GraphSplit make_split(SimplicialGraph const& g, VertexSet delta1, VertexSet delta2);
void validate_split(SimplicialGraph const& g, GraphSplit const& split);

/// Reads "d1=a b c,d2=c d e". Labels may be separated by spaces or '+';
/// the keys delta1/δ1 and delta2/δ2 are also accepted.
GraphSplit parse_split(SimplicialGraph const& g, std::string_view text);

enum class Side { Lambda = 0, One = 1, Two = 2 };

std::string_view to_string(Side s);

struct Syllable {
  GroupWord word;  // normal form
  Side side;
  bool operator==(Syllable const&) const = default;
};

/// Amalgam normal form by greedy peeling: the largest left factor of the
/// element lying in one side subgroup, then the largest in the other, and
/// so on. Letters of the intersection join the earlier syllable. An
/// element of the intersection subgroup (the identity included) is one
/// Lambda syllable.
std::vector<Syllable> syllable_decomposition(SimplicialGraph const& g, GroupWord const& w,
                                             GraphSplit const& split);

/// Coset rep·W_side of a side subgroup: a vertex of the Bass–Serre tree.
/// `rep` is the shortlex-least element of the coset.
struct BlockCoset {
  GroupWord rep;
  Side side;
  bool operator==(BlockCoset const&) const = default;
};

/// Coset rep·W_lambda: an edge of the Bass–Serre tree.
struct WallCoset {
  GroupWord rep;
  bool operator==(WallCoset const&) const = default;
};

/// Tree geodesic from the start block (side One, identity) to the nearest
/// block containing the element. blocks.size() == walls.size() + 1, and
/// walls[i] joins blocks[i] to blocks[i + 1].
struct Itinerary {
  std::vector<BlockCoset> blocks;
  std::vector<WallCoset> walls;

  int length() const { return static_cast<int>(walls.size()); }
};

Itinerary itinerary(SimplicialGraph const& g, GroupWord const& w, GraphSplit const& split);
Itinerary itinerary_from_syllables(SimplicialGraph const& g, std::vector<Syllable> const& syl,
                                   GraphSplit const& split);

VertexSet side_generators(GraphSplit const& split, Side s);

/// Membership-based coset comparisons.
bool same_block(SimplicialGraph const& g, GraphSplit const& split, BlockCoset const& a,
                BlockCoset const& b);
bool same_wall(SimplicialGraph const& g, GraphSplit const& split, WallCoset const& a,
               WallCoset const& b);
bool wall_contains(SimplicialGraph const& g, GraphSplit const& split, WallCoset const& wall,
                   GroupWord const& element);

/// Alternating sides, consecutive blocks sharing the wall between them,
/// and no repeated wall.
bool is_geodesic_itinerary(SimplicialGraph const& g, GraphSplit const& split,
                           Itinerary const& it);

nlohmann::json split_to_json(SimplicialGraph const& g, GraphSplit const& split);
nlohmann::json syllables_to_json(SimplicialGraph const& g, std::vector<Syllable> const& syl);
nlohmann::json itinerary_to_json(SimplicialGraph const& g, Itinerary const& it);

}  // namespace morsecert
