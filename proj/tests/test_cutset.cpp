#include <doctest.h>

#include "morsecert/corpus.hpp"
#include "morsecert/cutset.hpp"
#include "morsecert/errors.hpp"
#include "oracles.hpp"

using namespace morsecert;

namespace {

GraphSplit e3_split(SimplicialGraph const& g) {
  return make_split(g, g.set_of(std::vector<std::string>{"a", "b"}),
                    g.set_of(std::vector<std::string>{"b", "c"}));
}

}  // namespace

TEST_CASE("CayleyBall matches the shortlex oracle") {
  for (auto const& g : {edgeless_graph(3), cycle_graph(4), cycle_graph(5)}) {
    CayleyBall ball(g, 5);
    auto ref = oracle::shortlex_ball(g, 5);
    CHECK(ball.size() == static_cast<int>(ref.order.size()));
    for (auto const& w : ref.order) {
      auto i = ball.index_of(GroupWord{w});
      REQUIRE(i);
      CHECK(ball.element(*i).letters == w);
    }
    for (int i = 0; i < ball.size(); ++i) {
      for (Vertex s = 0; s < g.size(); ++s) {
        int j = ball.neighbor(i, s);
        if (ball.length(i) < ball.radius()) REQUIRE(j >= 0);
        if (j >= 0) CHECK(ball.neighbor(j, s) == i);
      }
    }
  }
  CHECK(CayleyBall(edgeless_graph(3), 6).size() == 190);
}

TEST_CASE("cutset_check examples") {
  auto g = edgeless_graph(3);
  auto split = e3_split(g);
  auto r = cutset_check(g, parse_word(g, "a"), parse_word(g, "c"), split, 4);
  CHECK(r.separated);
  CHECK(r.wall.rep.empty());
  CHECK_FALSE(r.witness_path);
  auto j = cutset_to_json(g, r);
  CHECK(j["separated"] == true);
  CHECK(j.contains("note"));
  CHECK(j["witness_path"].is_null());

  CHECK_THROWS_AS(cutset_check(g, parse_word(g, "a"), parse_word(g, "ab"), split, 4),
                  InvalidArgument);
  CHECK_THROWS_AS(cutset_check(g, parse_word(g, "a"), parse_word(g, "c"), split, 2),
                  InvalidArgument);
  // The only distinguishing wall contains the identity.
  CHECK_THROWS_AS(cutset_check(g, GroupWord{}, parse_word(g, "c"), split, 4), InvalidArgument);
}

TEST_CASE("component labels delete the wall") {
  auto g = edgeless_graph(3);
  CutsetChecker checker(g, e3_split(g), 4);
  auto labels = checker.component_labels(WallCoset{GroupWord{}});
  auto const& ball = checker.ball();
  int identity = *ball.index_of(GroupWord{});
  int b = *ball.index_of(parse_word(g, "b"));
  CHECK(labels[identity] == -1);
  CHECK(labels[b] == -1);
  int a = *ball.index_of(parse_word(g, "a"));
  int c = *ball.index_of(parse_word(g, "c"));
  CHECK(labels[a] >= 0);
  CHECK(labels[a] != labels[c]);
  CHECK(labels[a] == labels[*ball.index_of(parse_word(g, "ab"))]);
}

TEST_CASE("sweeps find no unseparated pair") {
  struct Case {
    SimplicialGraph g;
    std::vector<std::string> d1, d2;
    int max_length;
  };
  std::vector<Case> cases{
      {edgeless_graph(3), {"a", "b"}, {"b", "c"}, 3},
      {edgeless_graph(5), {"a", "b", "c"}, {"c", "d", "e"}, 2},
      {cycle_graph(4), {"v1", "v2", "v3"}, {"v1", "v3", "v4"}, 3},
      {cycle_graph(5), {"v1", "v2", "v3", "v4"}, {"v4", "v5", "v1"}, 2},
  };
  for (auto const& c : cases) {
    auto split = make_split(c.g, c.g.set_of(c.d1), c.g.set_of(c.d2));
    CutsetChecker checker(c.g, split, c.max_length + 2);
    auto serial = checker.sweep(c.max_length, false);
    auto par = checker.sweep(c.max_length, true);
    CHECK(serial.failures.empty());
    CHECK(serial.checked > 0);
    CHECK(serial.separated == serial.checked);
    CHECK(serial.pairs == serial.checked + serial.equal_itineraries + serial.no_avoiding_wall);
    CHECK(par.pairs == serial.pairs);
    CHECK(par.checked == serial.checked);
    CHECK(par.separated == serial.separated);
    CHECK(par.failures == serial.failures);
    CHECK(par.walls == serial.walls);
  }
  auto g = edgeless_graph(3);
  CutsetChecker checker(g, e3_split(g), 4);
  CHECK_THROWS_AS(checker.sweep(3, false), InvalidArgument);
}

TEST_CASE("single checks agree with the sweep") {
  auto g = cycle_graph(4);
  auto split = make_split(g, g.set_of(std::vector<std::string>{"v1", "v2", "v3"}),
                          g.set_of(std::vector<std::string>{"v1", "v3", "v4"}));
  CutsetChecker checker(g, split, 5);
  auto const& ball = checker.ball();
  int checked = 0;
  for (int i = 0; i < ball.size(); ++i) {
    for (int j = i + 1; j < ball.size(); j += 4) {
      if (ball.length(i) > 3 || ball.length(j) > 3) continue;
      try {
        auto r = checker.check(ball.element(i), ball.element(j));
        CHECK(r.separated);
        ++checked;
      } catch (InvalidArgument const&) {
      }
    }
  }
  CHECK(checked > 20);
}
