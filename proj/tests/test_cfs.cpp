#include <doctest.h>

#include <random>

#include "morsecert/cfs.hpp"
#include "morsecert/corpus.hpp"
#include "morsecert/graph_io.hpp"
#include "oracles.hpp"

using namespace morsecert;

TEST_CASE("four_cycle_graph examples") {
  auto c4 = four_cycle_graph(cycle_graph(4));
  CHECK(c4.nodes.size() == 1);
  CHECK(c4.links.empty());
  CHECK(four_cycle_graph(cycle_graph(5)).nodes.empty());

  auto k23 = complete_bipartite_2_3();
  auto q = four_cycle_graph(k23);
  REQUIRE(q.nodes.size() == 3);
  CHECK(q.links == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  // axby, axbz, aybz
  CHECK(q.nodes[0].vertices == std::vector<Vertex>{0, 2, 1, 3});
  CHECK(q.nodes[1].vertices == std::vector<Vertex>{0, 2, 1, 4});
  CHECK(q.nodes[2].vertices == std::vector<Vertex>{0, 3, 1, 4});
}

TEST_CASE("four_cycle_graph matches brute force on graphs up to 8 vertices") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 400; ++i) {
    auto g = oracle::random_graph(rng, 4 + i % 5, 0.35 + 0.1 * (i % 4));
    auto q = four_cycle_graph(g);
    std::vector<oracle::Mask> supports;
    for (auto const& c : q.nodes) supports.push_back(c.support().bits());
    CHECK(std::set<oracle::Mask>(supports.begin(), supports.end()) ==
          oracle::four_cycle_supports(g));
    CHECK(supports.size() == oracle::four_cycle_supports(g).size());
    std::set<std::pair<int, int>> links(q.links.begin(), q.links.end());
    for (int a = 0; a < static_cast<int>(supports.size()); ++a) {
      for (int b = a + 1; b < static_cast<int>(supports.size()); ++b) {
        CHECK(links.contains({a, b}) == oracle::linked_four_cycles(g, supports[a], supports[b]));
      }
    }
  }
}

TEST_CASE("is_cfs examples") {
  CHECK(is_cfs(cycle_graph(4)));
  CHECK(is_cfs(complete_bipartite_2_3()));
  CHECK_FALSE(is_cfs(cycle_graph(5)));
  CHECK_FALSE(is_cfs(glued_six_cycle()));
  CHECK_FALSE(is_cfs(complete_graph(3)));
  // A cone over the square: the apex is a universal clique factor.
  auto cone = parse_graph("edges v1 v2, v2 v3, v3 v4, v4 v1, x v1, x v2, x v3, x v4");
  CHECK(is_cfs(cone));
}

TEST_CASE("is_planar examples") {
  CHECK(is_planar(complete_bipartite_2_3()));
  CHECK_FALSE(is_planar(complete_graph(5)));
  CHECK(is_planar(glued_six_cycle()));
  auto k33 = parse_graph("edges a x, a y, a z, b x, b y, b z, c x, c y, c z");
  CHECK_FALSE(is_planar(k33));
}

TEST_CASE("is_planar agrees with Euler bound and Kuratowski search up to 9 vertices") {
  std::mt19937_64 rng(8);
  int nonplanar = 0;
  for (int i = 0; i < 250; ++i) {
    int n = 5 + i % 5;
    auto g = oracle::random_graph(rng, n, 0.3 + 0.05 * (i % 8));
    bool planar = is_planar(g);
    if (g.edge_count() > 3 * n - 6) CHECK_FALSE(planar);
    CHECK(planar == oracle::planar_by_kuratowski(g));
    nonplanar += !planar;
  }
  CHECK(nonplanar > 20);
}

TEST_CASE("is_cfs0 examples and clause order") {
  CHECK(is_cfs0(complete_bipartite_2_3()).member);
  auto c4 = is_cfs0(cycle_graph(4));
  CHECK_FALSE(c4.member);
  CHECK(c4.reason == cfs_reason::kTooSmall);
  auto c6g = is_cfs0(glued_six_cycle());
  CHECK_FALSE(c6g.member);
  CHECK(c6g.reason == cfs_reason::kNotCfs);
  // The cone over a square is CFS but has triangles.
  auto cone = parse_graph("edges v1 v2, v2 v3, v3 v4, v4 v1, x v1, x v2, x v3, x v4");
  CHECK(is_cfs0(cone).reason == cfs_reason::kTriangle);
  // Two squares sharing a vertex: CFS fails (the two 4-cycles are not linked).
  auto bowtie = parse_graph("edges a b, b c, c d, d a, a x, x y, y z, z a");
  CHECK(is_cfs0(bowtie).reason == cfs_reason::kNotCfs);
  // No four-cycle component spans a disjoint union, so CFS fails before connectivity.
  auto k23_plus = parse_graph(
      "edges a x, a y, a z, b x, b y, b z, p q, q r, r s, s p");
  CHECK(is_cfs0(k23_plus).reason == cfs_reason::kNotCfs);
}

TEST_CASE("cut vertex and bridge detection") {
  auto p3 = path_graph(3);
  CHECK(find_cut_vertex(p3) == std::optional<Vertex>(1));
  CHECK(find_bridge(p3).has_value());
  CHECK_FALSE(find_cut_vertex(cycle_graph(5)));
  CHECK_FALSE(find_bridge(cycle_graph(5)));
}

TEST_CASE("CFS0 implies CFS on graphs up to 8 vertices") {
  std::mt19937_64 rng(99);
  int members = 0;
  for (int i = 0; i < 3000; ++i) {
    auto g = oracle::random_graph(rng, 5 + i % 4, 0.45);
    auto r = is_cfs0(g);
    if (r.member) {
      ++members;
      CHECK(is_cfs(g));
    } else {
      CHECK_FALSE(r.reason.empty());
    }
  }
  MESSAGE("CFS0 members sampled: " << members);
}

TEST_CASE("four-cycle graph JSON and DOT") {
  auto g = complete_bipartite_2_3();
  auto q = four_cycle_graph(g);
  auto j = four_cycle_graph_to_json(g, q);
  CHECK(j["nodes"].size() == 3);
  CHECK(j["links"].size() == 3);
  CHECK(j["components"].size() == 1);
  CHECK(j["components"][0]["support"].size() == 5);
  CHECK(four_cycle_graph_to_dot(g, q).find("n0 -- n1") != std::string::npos);
}
