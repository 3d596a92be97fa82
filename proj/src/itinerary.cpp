#include "morsecert/itinerary.hpp"

#include <algorithm>

#include "morsecert/errors.hpp"
#include "morsecert/graph_io.hpp"

namespace morsecert {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

VertexSet parse_side(SimplicialGraph const& g, std::string_view text) {
  VertexSet s;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    auto v = g.find(tok);
    if (!v) throw ParseError("unknown vertex '" + tok + "' in split");
    s.insert(*v);
    tok.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '+' || c == '\t') {
      flush();
    } else {
      tok += c;
    }
  }
  flush();
  return s;
}

// Largest left factor of the reduced word `r` lying in W_s: the letters of
// `s` that can be commuted to the front. Removes them from `r`.
std::vector<Vertex> peel_prefix(SimplicialGraph const& g, std::vector<Vertex>& r, VertexSet s) {
  std::vector<Vertex> prefix, rest;
  for (Vertex x : r) {
    bool movable = s.contains(x) &&
                   std::all_of(rest.begin(), rest.end(),
                               [&](Vertex y) { return g.adjacent(x, y); });
    (movable ? prefix : rest).push_back(x);
  }
  r = std::move(rest);
  return prefix;
}

}  // namespace

std::string_view to_string(Side s) {
  switch (s) {
    case Side::Lambda: return "lambda";
    case Side::One: return "1";
    case Side::Two: return "2";
  }
  return "?";
}

void validate_split(SimplicialGraph const& g, GraphSplit const& split) {
  VertexSet all = g.vertices();
  if (!split.delta1.subset_of(all) || !split.delta2.subset_of(all)) {
    throw InvalidArgument("invalid split: side outside the graph");
  }
  if ((split.delta1 | split.delta2) != all) {
    throw InvalidArgument("invalid split: sides do not cover the vertices");
  }
  if (split.delta1 == all || split.delta2 == all) {
    throw InvalidArgument("invalid split: sides must be proper");
  }
  if (split.lambda != (split.delta1 & split.delta2)) {
    throw InvalidArgument("invalid split: lambda is not the intersection");
  }
  for (auto [u, v] : g.edges()) {
    VertexSet e = VertexSet::of({u, v});
    if (!e.subset_of(split.delta1) && !e.subset_of(split.delta2)) {
      throw InvalidArgument("invalid split: edge " + g.label(u) + " " + g.label(v) +
                            " lies in neither side");
    }
  }
}

GraphSplit make_split(SimplicialGraph const& g, VertexSet delta1, VertexSet delta2) {
  GraphSplit s{delta1, delta2, delta1 & delta2};
  validate_split(g, s);
  return s;
}

GraphSplit parse_split(SimplicialGraph const& g, std::string_view text) {
  std::optional<VertexSet> d1, d2;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string part = trim(text.substr(pos, comma - pos));
    pos = comma + 1;
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("split part '" + part + "' lacks '='");
    std::string key = trim(std::string_view(part).substr(0, eq));
    VertexSet side = parse_side(g, std::string_view(part).substr(eq + 1));
    if (key == "d1" || key == "delta1" || key == "δ1") {
      d1 = side;
    } else if (key == "d2" || key == "delta2" || key == "δ2") {
      d2 = side;
    } else {
      throw ParseError("unknown split key '" + key + "'");
    }
  }
  if (!d1 || !d2) throw ParseError("split needs both d1 and d2");
  return make_split(g, *d1, *d2);
}

VertexSet side_generators(GraphSplit const& split, Side s) {
  switch (s) {
    case Side::One: return split.delta1;
    case Side::Two: return split.delta2;
    case Side::Lambda: return split.lambda;
  }
  return {};
}

std::vector<Syllable> syllable_decomposition(SimplicialGraph const& g, GroupWord const& w,
                                             GraphSplit const& split) {
  validate_split(g, split);
  std::vector<Vertex> r = reduce(g, w).letters;
  if (letters_of(GroupWord{r}).subset_of(split.lambda)) {
    return {Syllable{normal_form(g, GroupWord{r}), Side::Lambda}};
  }
  // Letters of delta1 - lambda never commute with letters of delta2 - lambda,
  // so only one side can start the word; after that the sides alternate.
  std::vector<Syllable> out;
  std::vector<Vertex> probe = r;
  auto first = peel_prefix(g, probe, split.delta1);
  Side side = letters_of(GroupWord{first}).subset_of(split.lambda) ? Side::Two : Side::One;
  while (!r.empty()) {
    auto piece = peel_prefix(g, r, side_generators(split, side));
    out.push_back(Syllable{normal_form(g, GroupWord{piece}), side});
    side = side == Side::One ? Side::Two : Side::One;
  }
  return out;
}

Itinerary itinerary_from_syllables(SimplicialGraph const& g, std::vector<Syllable> const& syl,
                                   GraphSplit const& split) {
  Itinerary it;
  it.blocks.push_back(BlockCoset{GroupWord{}, Side::One});
  if (syl.empty() || syl.front().side == Side::Lambda) return it;
  if (syl.front().side == Side::Two) {
    it.walls.push_back(WallCoset{GroupWord{}});
    it.blocks.push_back(BlockCoset{GroupWord{}, Side::Two});
  }
  GroupWord prefix;
  for (std::size_t i = 0; i + 1 < syl.size(); ++i) {
    prefix = concat(prefix, syl[i].word);
    it.walls.push_back(WallCoset{min_coset_rep(g, prefix, split.lambda)});
    Side next = syl[i + 1].side;
    it.blocks.push_back(BlockCoset{min_coset_rep(g, prefix, side_generators(split, next)), next});
  }
  return it;
}

Itinerary itinerary(SimplicialGraph const& g, GroupWord const& w, GraphSplit const& split) {
  return itinerary_from_syllables(g, syllable_decomposition(g, w, split), split);
}

bool same_block(SimplicialGraph const& g, GraphSplit const& split, BlockCoset const& a,
                BlockCoset const& b) {
  return a.side == b.side && same_coset(g, a.rep, b.rep, side_generators(split, a.side));
}

bool same_wall(SimplicialGraph const& g, GraphSplit const& split, WallCoset const& a,
               WallCoset const& b) {
  return same_coset(g, a.rep, b.rep, split.lambda);
}

bool wall_contains(SimplicialGraph const& g, GraphSplit const& split, WallCoset const& wall,
                   GroupWord const& element) {
  return same_coset(g, wall.rep, element, split.lambda);
}

bool is_geodesic_itinerary(SimplicialGraph const& g, GraphSplit const& split,
                           Itinerary const& it) {
  if (it.blocks.size() != it.walls.size() + 1) return false;
  for (std::size_t i = 0; i < it.walls.size(); ++i) {
    auto const& a = it.blocks[i];
    auto const& b = it.blocks[i + 1];
    if (a.side == b.side || a.side == Side::Lambda || b.side == Side::Lambda) return false;
    // The wall coset is contained in both adjacent block cosets.
    auto const& w = it.walls[i].rep;
    if (!same_coset(g, a.rep, w, side_generators(split, a.side))) return false;
    if (!same_coset(g, b.rep, w, side_generators(split, b.side))) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (same_wall(g, split, it.walls[j], it.walls[i])) return false;
    }
  }
  return true;
}

nlohmann::json split_to_json(SimplicialGraph const& g, GraphSplit const& split) {
  return {{"delta1", labels_json(g, split.delta1)},
          {"delta2", labels_json(g, split.delta2)},
          {"lambda", labels_json(g, split.lambda)}};
}

nlohmann::json syllables_to_json(SimplicialGraph const& g, std::vector<Syllable> const& syl) {
  nlohmann::json out = nlohmann::json::array();
  for (auto const& s : syl) {
    out.push_back({{"word", word_to_json(g, s.word)}, {"side", to_string(s.side)}});
  }
  return out;
}

nlohmann::json itinerary_to_json(SimplicialGraph const& g, Itinerary const& it) {
  nlohmann::json path = nlohmann::json::array();
  for (std::size_t i = 0; i < it.blocks.size(); ++i) {
    if (i > 0) {
      path.push_back({{"type", "wall"}, {"rep", word_to_json(g, it.walls[i - 1].rep)}});
    }
    path.push_back({{"type", "block"},
                    {"side", to_string(it.blocks[i].side)},
                    {"rep", word_to_json(g, it.blocks[i].rep)}});
  }
  return {{"path", path}, {"tree_distance", it.length()}};
}

}  // namespace morsecert
