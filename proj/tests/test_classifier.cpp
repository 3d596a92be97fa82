#include <doctest.h>

#include <random>

#include "morsecert/classifier.hpp"
#include "morsecert/corpus.hpp"
#include "morsecert/graph_io.hpp"
#include "oracles.hpp"

using namespace morsecert;

TEST_CASE("classify_racg examples") {
  auto c4 = classify_racg(cycle_graph(4));
  CHECK(c4.verdict == Verdict::Empty);
  CHECK(c4.justification == Justification::NontrivialJoinEmpty);

  CHECK(classify_racg(cycle_graph(5)).verdict == Verdict::ContainsCircle);

  auto g = glued_six_cycle();
  auto c6g = classify_racg(g);
  CHECK(c6g.verdict == Verdict::OmegaCantor);
  REQUIRE(c6g.certificate);
  CHECK(c6g.certificate->kind == CertKind::CharneySultan);
  REQUIRE(c6g.four_cycle);
  CHECK(c6g.four_cycle->support() == g.set_of(std::vector<std::string>{"u", "v1", "v2", "v3"}));

  auto p3 = classify_racg(path_graph(3));
  CHECK(p3.verdict == Verdict::TwoPoints);
  CHECK(p3.justification == Justification::SuspensionOfClique);

  CHECK(classify_racg(edgeless_graph(3)).verdict == Verdict::Cantor);
  CHECK(classify_racg(edgeless_graph(2)).verdict == Verdict::TwoPoints);
  for (int n = 1; n <= 4; ++n) CHECK(classify_racg(complete_graph(n)).verdict == Verdict::Empty);
  CHECK(classify_racg(cycle_graph(6)).verdict == Verdict::ContainsCircle);
}

TEST_CASE("classify_raag examples") {
  CHECK(classify_raag(path_graph(2)).verdict == Verdict::Empty);
  CHECK(classify_raag(path_graph(1)).verdict == Verdict::TwoPoints);
  CHECK(classify_raag(path_graph(3)).verdict == Verdict::Empty);
  auto p4 = classify_raag(path_graph(4));
  CHECK(p4.verdict == Verdict::TotallyDisconnected);
  REQUIRE(p4.certificate);
  CHECK(p4.certificate->kind == CertKind::Tree);
  CHECK(classify_raag(cycle_graph(5)).verdict == Verdict::Unknown);
  CHECK(classify_raag(SimplicialGraph({}, {})).verdict == Verdict::Empty);
}

TEST_CASE("ladder precedence") {
  // A single vertex is a clique: Empty comes before TwoPoints.
  CHECK(classify_racg(complete_graph(1)).verdict == Verdict::Empty);
  // The path a-b-c is a trivial join and a suspension: TwoPoints.
  CHECK(classify_racg(path_graph(3)).verdict == Verdict::TwoPoints);
  // Suspension of an edge: {a, c} * {x, y}, where x-y is an edge.
  auto s = parse_graph("edges a x, a y, c x, c y, x y");
  CHECK(classify_racg(s).verdict == Verdict::TwoPoints);
}

TEST_CASE("budget overrun yields Unknown with a reason") {
  DecideOptions tight;
  tight.split_budget = 2;
  // Two disjoint triangles joined by a path: not a base case, needs splits,
  // and has no long induced cycle.
  auto g = parse_graph("edges a b, b c, c a, c d, d e, e f, f g, g e");
  auto v = classify_racg(g, tight);
  CHECK(v.verdict == Verdict::Unknown);
  CHECK(v.justification == Justification::BudgetExceeded);
  CHECK_FALSE(v.reason.empty());
  CHECK(classify_racg(g).verdict == Verdict::Cantor);
}

TEST_CASE("budget overrun still reports a circle") {
  DecideOptions tight;
  tight.split_budget = 1;
  auto v = classify_racg(cycle_graph(7), tight);
  CHECK(v.verdict == Verdict::ContainsCircle);
}

TEST_CASE("verdicts replay and serialise") {
  std::vector<SimplicialGraph> graphs{cycle_graph(4), cycle_graph(5), glued_six_cycle(),
                                      path_graph(3),  path_graph(4),  edgeless_graph(2),
                                      edgeless_graph(3), complete_graph(3),
                                      complete_bipartite_2_3()};
  for (auto const& g : graphs) {
    for (auto kind : {GroupKind::RACG, GroupKind::RAAG}) {
      auto v = classify(g, kind);
      if (v.verdict != Verdict::Unknown) CHECK(replay(g, v));
      auto j = verdict_to_json(g, v);
      CHECK(j["verdict"] == std::string(to_string(v.verdict)));
      CHECK(j["group"] == std::string(to_string(kind)));
      CHECK(j["justification"]["rule"] == std::string(to_string(v.justification)));
      CHECK(j.contains("witness"));
    }
  }
}

TEST_CASE("replay rejects a wrong witness") {
  auto g = cycle_graph(5);
  auto v = classify_racg(g);
  REQUIRE(v.circle);
  auto bad = v;
  bad.verdict = Verdict::Cantor;
  CHECK_FALSE(replay(g, bad));
  auto c6g = glued_six_cycle();
  auto w = classify_racg(c6g);
  w.verdict = Verdict::ContainsCircle;
  CHECK_FALSE(replay(c6g, w));
  // The 6-cycle v1..v6 is induced but has a glued 4-cycle.
  w.justification = Justification::CircleObstruction;
  w.circle = Cycle{{1, 2, 3, 4, 5, 6}};
  CHECK_FALSE(replay(c6g, w));
  auto raag = classify_raag(path_graph(4));
  raag.group = GroupKind::RACG;
  CHECK_FALSE(replay(path_graph(4), raag));
}

TEST_CASE("Empty iff clique or non-trivial join, on graphs up to 8 vertices") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 600; ++i) {
    int n = 1 + i % 8;
    auto g = oracle::random_graph(rng, n, 0.3 + 0.1 * (i % 6));
    auto v = classify_racg(g);
    oracle::Mask all = (oracle::Mask{1} << n) - 1;
    bool expected = oracle::clique(g, all) || oracle::scan_joins(g, all).nontrivial;
    CHECK((v.verdict == Verdict::Empty) == expected);
    if (v.verdict != Verdict::Unknown) CHECK(replay(g, v));
    if (v.verdict != Verdict::ContainsCircle && v.verdict != Verdict::Unknown) {
      CHECK_FALSE(oracle::circle_obstruction(g));
    }
  }
}
