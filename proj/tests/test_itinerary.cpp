#include <doctest.h>

#include <algorithm>

#include "morsecert/corpus.hpp"
#include "morsecert/errors.hpp"
#include "morsecert/itinerary.hpp"
#include "oracles.hpp"

using namespace morsecert;

namespace {

GraphSplit e3_split(SimplicialGraph const& g) {
  return make_split(g, g.set_of(std::vector<std::string>{"a", "b"}),
                    g.set_of(std::vector<std::string>{"b", "c"}));
}

std::vector<Side> sides(std::vector<Syllable> const& syl) {
  std::vector<Side> out;
  for (auto const& s : syl) out.push_back(s.side);
  return out;
}

// Checks an itinerary against the Bass-Serre tree oracle: the path starts at
// the root, follows tree edges, and ends at the nearer block of the element.
void check_against_tree(SimplicialGraph const& g, GraphSplit const& split,
                        oracle::BassSerreTree const& tree, std::vector<Vertex> const& word) {
  GroupWord w{word};
  auto it = itinerary(g, w, split);
  auto [b1, b2] = tree.blocks_of.at(word);
  int nearest = std::min(tree.distance[b1], tree.distance[b2]);
  CHECK(it.length() == nearest);
  CHECK(is_geodesic_itinerary(g, split, it));

  auto node = [&](BlockCoset const& b) {
    auto pair = tree.blocks_of.at(b.rep.letters);
    return b.side == Side::One ? pair.first : pair.second;
  };
  REQUIRE(it.blocks.size() == it.walls.size() + 1);
  CHECK(tree.distance[node(it.blocks[0])] == 0);
  for (std::size_t i = 0; i + 1 < it.blocks.size(); ++i) {
    CHECK(tree.parent[node(it.blocks[i + 1])] == node(it.blocks[i]));
    for (auto const& b : {it.blocks[i], it.blocks[i + 1]}) {
      CHECK(same_block(g, split, BlockCoset{it.walls[i].rep, b.side}, b));
    }
  }
  int last = node(it.blocks.back());
  CHECK((last == b1 || last == b2));
  CHECK(tree.distance[last] == nearest);

  auto syl = syllable_decomposition(g, w, split);
  bool starts_two = !syl.empty() && syl.front().side == Side::Two;
  if (syl.size() == 1 && syl.front().side == Side::Lambda) {
    CHECK(it.length() == 0);
  } else {
    CHECK(it.length() == static_cast<int>(syl.size()) - 1 + (starts_two ? 1 : 0));
  }
}

}  // namespace

TEST_CASE("make_split validation") {
  auto c4 = cycle_graph(4);
  auto ok = make_split(c4, c4.set_of(std::vector<std::string>{"v1", "v2", "v3"}),
                       c4.set_of(std::vector<std::string>{"v1", "v3", "v4"}));
  CHECK(ok.lambda == c4.set_of(std::vector<std::string>{"v1", "v3"}));
  // The edge v3-v4 lies in neither side.
  CHECK_THROWS_AS(make_split(c4, c4.set_of(std::vector<std::string>{"v1", "v2", "v4"}),
                             c4.set_of(std::vector<std::string>{"v2", "v3"})),
                  InvalidArgument);
  CHECK_THROWS_AS(make_split(c4, c4.vertices(), c4.set_of(std::vector<std::string>{"v1"})),
                  InvalidArgument);
  CHECK_THROWS_AS(make_split(c4, c4.set_of(std::vector<std::string>{"v1", "v2"}),
                             c4.set_of(std::vector<std::string>{"v3"})),
                  InvalidArgument);
  GraphSplit bad = ok;
  bad.lambda = VertexSet();
  CHECK_THROWS_AS(validate_split(c4, bad), InvalidArgument);
}

TEST_CASE("parse_split") {
  auto e3 = edgeless_graph(3);
  CHECK(parse_split(e3, "d1=a b,d2=b c") == e3_split(e3));
  CHECK(parse_split(e3, "delta1=a+b, delta2=b+c") == e3_split(e3));
  CHECK_THROWS(parse_split(e3, "d1=a b"));
  CHECK_THROWS(parse_split(e3, "d1=a q,d2=b c"));
}

TEST_CASE("syllables and itineraries on the three-point example") {
  auto g = edgeless_graph(3);
  auto split = e3_split(g);

  auto b = syllable_decomposition(g, parse_word(g, "b"), split);
  REQUIRE(b.size() == 1);
  CHECK(b[0].side == Side::Lambda);
  CHECK(itinerary(g, parse_word(g, "b"), split).length() == 0);
  CHECK(itinerary(g, GroupWord{}, split).length() == 0);

  auto ac = syllable_decomposition(g, parse_word(g, "ac"), split);
  CHECK(sides(ac) == std::vector<Side>{Side::One, Side::Two});
  auto it_ac = itinerary(g, parse_word(g, "ac"), split);
  REQUIRE(it_ac.length() == 1);
  CHECK(word_to_string(g, it_ac.walls[0].rep) == "a");
  CHECK(it_ac.blocks[1].side == Side::Two);

  auto ca = syllable_decomposition(g, parse_word(g, "ca"), split);
  CHECK(sides(ca) == std::vector<Side>{Side::Two, Side::One});
  auto it_ca = itinerary(g, parse_word(g, "ca"), split);
  REQUIRE(it_ca.length() == 2);
  CHECK(it_ca.walls[0].rep.empty());
  CHECK(word_to_string(g, it_ca.walls[1].rep) == "c");
  CHECK(it_ca.blocks[2].side == Side::One);

  // a and ab share a block and a wall.
  CHECK(itinerary(g, parse_word(g, "a"), split).length() == 0);
  CHECK(same_wall(g, split, WallCoset{parse_word(g, "a")}, WallCoset{parse_word(g, "ab")}));
  CHECK(same_block(g, split, BlockCoset{parse_word(g, "c"), Side::Two},
                   BlockCoset{GroupWord{}, Side::Two}));

  auto j = itinerary_to_json(g, it_ca);
  CHECK(j["tree_distance"] == 2);
  CHECK(j["path"].size() == 5);
  CHECK(j["path"][1]["type"] == "wall");
}

TEST_CASE("itineraries follow the Bass-Serre tree") {
  struct Case {
    SimplicialGraph g;
    std::vector<std::string> d1, d2;
    int radius;
  };
  std::vector<Case> cases{
      {edgeless_graph(3), {"a", "b"}, {"b", "c"}, 6},
      {edgeless_graph(3), {"a"}, {"b", "c"}, 6},
      {cycle_graph(4), {"v1", "v2", "v3"}, {"v1", "v3", "v4"}, 5},
      {cycle_graph(5), {"v1", "v2", "v3", "v4"}, {"v4", "v5", "v1"}, 5},
      {glued_six_cycle(), {"u", "v1", "v2", "v3"}, {"v1", "v2", "v3", "v4", "v5", "v6"}, 4},
      {path_graph(4), {"a", "b"}, {"b", "c", "d"}, 5},
  };
  for (auto const& c : cases) {
    auto split = make_split(c.g, c.g.set_of(c.d1), c.g.set_of(c.d2));
    auto tree = oracle::bass_serre_tree(c.g, split.delta1.bits(), split.delta2.bits(), c.radius);
    auto ball = oracle::shortlex_ball(c.g, c.radius);
    for (auto const& word : ball.order) check_against_tree(c.g, split, tree, word);
  }
}

TEST_CASE("syllables multiply back to the element") {
  auto g = cycle_graph(5);
  auto split = make_split(g, g.set_of(std::vector<std::string>{"v1", "v2", "v3", "v4"}),
                          g.set_of(std::vector<std::string>{"v4", "v5", "v1"}));
  auto ball = oracle::shortlex_ball(g, 5);
  for (auto const& word : ball.order) {
    GroupWord prod;
    auto syl = syllable_decomposition(g, GroupWord{word}, split);
    for (std::size_t i = 0; i < syl.size(); ++i) {
      prod = concat(prod, syl[i].word);
      if (syl[i].side != Side::Lambda) {
        CHECK(subgroup_membership(g, syl[i].word, side_generators(split, syl[i].side)));
        CHECK_FALSE(subgroup_membership(g, syl[i].word, split.lambda));
      }
      if (i > 0) CHECK(syl[i].side != syl[i - 1].side);
    }
    CHECK(normal_form(g, prod).letters == word);
  }
}
