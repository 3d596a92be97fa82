// One PASS/FAIL line per acceptance criterion. Exits nonzero when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "morsecert/cfs.hpp"
#include "morsecert/class_c.hpp"
#include "morsecert/classifier.hpp"
#include "morsecert/corpus.hpp"
#include "morsecert/graph_io.hpp"
#include "morsecert/cutset.hpp"
#include "morsecert/itinerary.hpp"
#include "morsecert/obstruction.hpp"
#include "morsecert/parallel.hpp"
#include "morsecert/words.hpp"
#include "oracles.hpp"

using namespace morsecert;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock limits in seconds.
constexpr double kPerVerdictLimit = 1.0;
constexpr double kClassOracleLimit = 300.0;
constexpr double kExclusionLimit = 600.0;
constexpr double kCfsLimit = 300.0;
constexpr double kWordLimit = 60.0;
constexpr double kItineraryLimit = 120.0;
constexpr double kCutsetLimit = 600.0;
constexpr double kReplayLimit = 300.0;
constexpr double kCorpusLimit = 120.0;

constexpr int kExclusionSamples = 10'000;
constexpr int kConnectedSixVertexClasses = 112;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects mismatch notes; keeps the first few for the report line.
struct Tally {
  long long checks = 0;
  long long failures = 0;
  std::string first;

  void expect(bool ok, std::string const& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (failures <= 3) first += (first.empty() ? "" : "; ") + what;
  }
};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome finish(Tally const& t, double elapsed, double limit, std::string const& extra = "") {
  std::ostringstream s;
  s << t.checks << " checks, " << t.failures << " failures, " << elapsed << " s (limit "
    << limit << " s)";
  if (!extra.empty()) s << ", " << extra;
  if (!t.first.empty()) s << " [" << t.first << "]";
  return {t.failures == 0 && elapsed < limit, s.str()};
}

Outcome verdict_table() {
  struct Row {
    std::string name;
    SimplicialGraph g;
    Verdict expected;
  };
  std::vector<Row> rows{{"C4", cycle_graph(4), Verdict::Empty},
                        {"C5", cycle_graph(5), Verdict::ContainsCircle},
                        {"E2", edgeless_graph(2), Verdict::TwoPoints},
                        {"P3", path_graph(3), Verdict::TwoPoints},
                        {"E3", edgeless_graph(3), Verdict::Cantor},
                        {"C6g", glued_six_cycle(), Verdict::OmegaCantor}};
  for (int n = 1; n <= 4; ++n) {
    rows.push_back({"K" + std::to_string(n), complete_graph(n), Verdict::Empty});
  }
  Tally t;
  double slowest = 0;
  for (auto const& r : rows) {
    auto t0 = Clock::now();
    auto v = classify_racg(r.g);
    double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    t.expect(v.verdict == r.expected, r.name + " gave " + std::string(to_string(v.verdict)));
    t.expect(dt < kPerVerdictLimit, r.name + " too slow");
    if (r.name == "C6g") {
      t.expect(v.certificate && v.certificate->kind == CertKind::CharneySultan,
               "C6g not via Charney-Sultan");
    }
  }
  return finish(t, slowest, kPerVerdictLimit, "slowest verdict");
}

Outcome raag_table() {
  struct Row {
    std::string name;
    SimplicialGraph g;
    Verdict expected;
  };
  std::vector<Row> rows{{"edge", path_graph(2), Verdict::Empty},
                        {"vertex", path_graph(1), Verdict::TwoPoints},
                        {"P3", path_graph(3), Verdict::Empty},
                        {"P4", path_graph(4), Verdict::TotallyDisconnected}};
  Tally t;
  double slowest = 0;
  for (auto const& r : rows) {
    auto t0 = Clock::now();
    auto v = classify_raag(r.g);
    slowest = std::max(slowest, seconds_since(t0));
    t.expect(v.verdict == r.expected, r.name + " gave " + std::string(to_string(v.verdict)));
  }
  return finish(t, slowest, kPerVerdictLimit, "slowest verdict");
}

Outcome class_oracle() {
  auto t0 = Clock::now();
  Tally t;
  int total = 0;
  for (int n = 1; n <= 6; ++n) {
    auto graphs = oracle::connected_graph_classes(n);
    if (n == 6) {
      t.expect(static_cast<int>(graphs.size()) == kConnectedSixVertexClasses,
               "six-vertex class count " + std::to_string(graphs.size()));
    }
    auto certs = decide_batch(graphs, GraphClass::C, DecideOptions{}, true);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      auto lfp = oracle::class_membership(graphs[i], false);
      t.expect(certs[i].member() == static_cast<bool>(lfp[(oracle::Mask{1} << n) - 1]),
               graph_to_text(graphs[i]));
      ++total;
    }
  }
  return finish(t, seconds_since(t0), kClassOracleLimit,
                std::to_string(total) + " connected graphs on 1-6 vertices");
}

Outcome exclusion() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(20261016);
  std::vector<SimplicialGraph> graphs;
  // Half uniform over sizes and densities, half sparse graphs on 6-8
  // vertices, where long induced cycles are common.
  for (int i = 0; i < kExclusionSamples; ++i) {
    if (i % 2 == 0) {
      int n = 1 + static_cast<int>(rng() % 8);
      double p = 0.15 + 0.1 * static_cast<double>(rng() % 7);
      graphs.push_back(oracle::random_graph(rng, n, p));
    } else {
      int n = 6 + static_cast<int>(rng() % 3);
      double p = 0.22 + 0.04 * static_cast<double>(rng() % 5);
      graphs.push_back(oracle::random_graph(rng, n, p));
    }
  }
  std::size_t sampled = graphs.size();
  for (auto& g : oracle::connected_graph_classes(7)) graphs.push_back(std::move(g));
  auto certs = decide_batch(graphs, GraphClass::C, DecideOptions{}, true);
  Tally t;
  int members = 0, obstructed = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    bool obstruction = find_circle_obstruction(graphs[i]).has_value();
    members += certs[i].member();
    obstructed += obstruction;
    t.expect(!(certs[i].member() && obstruction), graph_to_text(graphs[i]));
  }
  return finish(t, seconds_since(t0), kExclusionLimit,
                std::to_string(sampled) + " samples plus " +
                    std::to_string(graphs.size() - sampled) + " connected 7-vertex graphs, " +
                    std::to_string(members) + " members, " + std::to_string(obstructed) +
                    " obstructed");
}

Outcome cfs_suite() {
  auto t0 = Clock::now();
  Tally t;
  auto c4 = is_cfs0(cycle_graph(4));
  t.expect(is_cfs(cycle_graph(4)), "C4 not CFS");
  t.expect(!c4.member && c4.reason == cfs_reason::kTooSmall, "C4 CFS0 reason " + c4.reason);
  t.expect(is_cfs0(complete_bipartite_2_3()).member, "K23 not CFS0");
  t.expect(!is_cfs(glued_six_cycle()), "C6g is CFS");

  std::mt19937_64 rng(5);
  for (int i = 0; i < 4000; ++i) {
    int n = 1 + static_cast<int>(rng() % 8);
    auto g = oracle::random_graph(rng, n, 0.3 + 0.05 * static_cast<double>(rng() % 6));
    if (is_cfs0(g).member) t.expect(is_cfs(g), "CFS0 without CFS: " + graph_to_text(g));
    auto q = four_cycle_graph(g);
    std::vector<oracle::Mask> supports;
    for (auto const& c : q.nodes) supports.push_back(c.support().bits());
    t.expect(std::set<oracle::Mask>(supports.begin(), supports.end()) ==
                     oracle::four_cycle_supports(g) &&
                 supports.size() == oracle::four_cycle_supports(g).size(),
             "four-cycle nodes differ: " + graph_to_text(g));
    std::set<std::pair<int, int>> links(q.links.begin(), q.links.end());
    for (int a = 0; a < static_cast<int>(supports.size()); ++a) {
      for (int b = a + 1; b < static_cast<int>(supports.size()); ++b) {
        t.expect(links.contains({a, b}) ==
                     oracle::linked_four_cycles(g, supports[a], supports[b]),
                 "four-cycle link differs");
      }
    }
  }
  return finish(t, seconds_since(t0), kCfsLimit);
}

Outcome word_oracle() {
  auto t0 = Clock::now();
  Tally t;
  std::string sizes;
  for (auto [g, radius] : {std::pair{edgeless_graph(3), 6}, std::pair{cycle_graph(4), 5}}) {
    auto ball = oracle::shortlex_ball(g, radius);
    for (auto const& word : ball.order) {
      GroupWord w{word};
      t.expect(normal_form(g, w) == w, word_to_string(g, w) + " not fixed");
      // A scrambled spelling: reversed twice with a cancelling pair inside.
      auto scrambled = concat(inverse(inverse(w)), GroupWord{{0, 0}});
      t.expect(normal_form(g, scrambled) == w, word_to_string(g, w) + " scrambled");
      auto inv = normal_form(g, inverse(w));
      t.expect(ball.words.at(oracle::tits_matrix(g, inverse(w).letters)) == inv.letters,
               word_to_string(g, w) + " inverse");
    }
    sizes += (sizes.empty() ? "" : ", ") + std::to_string(ball.order.size()) + " elements";
  }
  return finish(t, seconds_since(t0), kWordLimit, sizes);
}

// Distance in the tree from the nearer of the two blocks holding the
// identity: the root W1(e), or its neighbour W2(e).
int distance_from_identity_blocks(oracle::BassSerreTree const& tree, int node, int root2) {
  for (int x = node; x >= 0; x = tree.parent[x]) {
    if (x == root2) return tree.distance[node] - 1;
  }
  return tree.distance[node];
}

void check_itinerary(Tally& t, SimplicialGraph const& g, GraphSplit const& split,
                     oracle::BassSerreTree const& tree, std::vector<Vertex> const& word) {
  GroupWord w{word};
  auto name = word_to_string(g, w);
  auto it = itinerary(g, w, split);
  auto syl = syllable_decomposition(g, w, split);
  auto [b1, b2] = tree.blocks_of.at(word);
  auto node = [&](BlockCoset const& b) {
    auto pair = tree.blocks_of.at(b.rep.letters);
    return b.side == Side::One ? pair.first : pair.second;
  };
  t.expect(is_geodesic_itinerary(g, split, it), name + " not geodesic");
  t.expect(it.length() == std::min(tree.distance[b1], tree.distance[b2]),
           name + " length differs from tree distance");
  bool chain = node(it.blocks.front()) == tree.blocks_of.at({}).first;
  for (std::size_t i = 0; i + 1 < it.blocks.size(); ++i) {
    chain = chain && tree.parent[node(it.blocks[i + 1])] == node(it.blocks[i]);
  }
  int last = node(it.blocks.back());
  t.expect(chain && (last == b1 || last == b2), name + " path differs from the tree");
  int root2 = tree.blocks_of.at({}).second;
  int d = std::min(distance_from_identity_blocks(tree, b1, root2),
                   distance_from_identity_blocks(tree, b2, root2));
  t.expect(static_cast<int>(syl.size()) == d + 1, name + " syllables != distance + 1");
}

Outcome itinerary_suite() {
  auto t0 = Clock::now();
  Tally t;
  auto g = edgeless_graph(3);
  auto split = make_split(g, g.set_of(std::vector<std::string>{"a", "b"}),
                          g.set_of(std::vector<std::string>{"b", "c"}));
  auto render = [&](Itinerary const& it) {
    std::string s;
    for (std::size_t i = 0; i < it.blocks.size(); ++i) {
      if (i > 0) s += " " + word_to_string(g, it.walls[i - 1].rep) + "L";
      s += " " + word_to_string(g, it.blocks[i].rep) + "W" +
           std::string(to_string(it.blocks[i].side));
    }
    return s;
  };
  t.expect(render(itinerary(g, parse_word(g, "b"), split)) == " W1", "b");
  t.expect(render(itinerary(g, parse_word(g, "ac"), split)) == " W1 aL aW2", "ac");
  t.expect(render(itinerary(g, parse_word(g, "ca"), split)) == " W1 L W2 cL cW1", "ca");

  auto tree = oracle::bass_serre_tree(g, split.delta1.bits(), split.delta2.bits(), 5);
  for (auto w : {"b", "ac", "ca"}) check_itinerary(t, g, split, tree, parse_word(g, w).letters);
  for (auto const& word : oracle::shortlex_ball(g, 5).order) {
    check_itinerary(t, g, split, tree, word);
  }

  auto e5 = edgeless_graph(5);
  auto split5 = make_split(e5, e5.set_of(std::vector<std::string>{"a", "b", "c"}),
                           e5.set_of(std::vector<std::string>{"c", "d", "e"}));
  auto tree5 = oracle::bass_serre_tree(e5, split5.delta1.bits(), split5.delta2.bits(), 5);
  for (auto const& word : oracle::shortlex_ball(e5, 5).order) {
    check_itinerary(t, e5, split5, tree5, word);
  }
  return finish(t, seconds_since(t0), kItineraryLimit);
}

Outcome cutset_sampling() {
  auto t0 = Clock::now();
  Tally t;
  std::string counts;
  auto e3 = edgeless_graph(3);
  auto e5 = edgeless_graph(5);
  std::vector<std::pair<SimplicialGraph, GraphSplit>> cases{
      {e3, make_split(e3, e3.set_of(std::vector<std::string>{"a", "b"}),
                      e3.set_of(std::vector<std::string>{"b", "c"}))},
      {e5, make_split(e5, e5.set_of(std::vector<std::string>{"a", "b", "c"}),
                      e5.set_of(std::vector<std::string>{"c", "d", "e"}))}};
  constexpr int kMaxLength = 5;
  for (auto const& [g, split] : cases) {
    CutsetChecker checker(g, split, kMaxLength + 2);
    auto s = checker.sweep(kMaxLength, true);
    t.checks += static_cast<long long>(s.checked);
    for (auto [i, j] : s.failures) {
      t.expect(false, word_to_string(g, checker.ball().element(i)) + " / " +
                          word_to_string(g, checker.ball().element(j)));
    }
    t.expect(s.separated == s.checked && s.checked > 0, "separated count mismatch");
    counts += (counts.empty() ? "" : "; ") + std::to_string(g.size()) + " generators: " +
              std::to_string(s.checked) + " separated of " + std::to_string(s.pairs) +
              " pairs (" + std::to_string(s.equal_itineraries) + " equal itineraries, " +
              std::to_string(s.no_avoiding_wall) + " walls through an endpoint)";
  }
  return finish(t, seconds_since(t0), kCutsetLimit, counts);
}

Outcome certificate_replay() {
  auto t0 = Clock::now();
  Tally t;
  std::vector<SimplicialGraph> graphs;
  for (int n = 1; n <= 6; ++n) {
    for (auto& g : oracle::connected_graph_classes(n)) graphs.push_back(std::move(g));
  }
  std::mt19937_64 rng(909);
  for (int i = 0; i < 2000; ++i) {
    graphs.push_back(oracle::random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.4));
  }
  for (auto const& e : corpus_entries()) {
    if (e.graph) graphs.push_back(*e.graph);
  }
  int members = 0;
  for (auto cls : {GraphClass::C, GraphClass::CPrime}) {
    auto certs = decide_batch(graphs, cls, DecideOptions{}, true);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      auto const& g = graphs[i];
      auto const& cert = certs[i];
      if (!cert.member()) continue;
      ++members;
      auto r = replay(g, cert);
      t.expect(static_cast<bool>(r), "replay: " + r.error);
      auto j = certificate_to_json(g, cert);
      auto back = certificate_from_json(g, nlohmann::json::parse(j.dump()));
      t.expect(back == cert && certificate_to_json(g, back) == j, "round trip");
    }
  }
  for (auto kind : {GroupKind::RACG, GroupKind::RAAG}) {
    auto verdicts = classify_batch(graphs, kind, DecideOptions{}, true);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (verdicts[i].verdict == Verdict::Unknown) continue;
      t.expect(static_cast<bool>(replay(graphs[i], verdicts[i])), "verdict replay");
    }
  }
  return finish(t, seconds_since(t0), kReplayLimit,
                std::to_string(members) + " member certificates");
}

Outcome corpus_run() {
  auto t0 = Clock::now();
  Tally t;
  auto entries = corpus_entries();
  auto results = run_corpus(entries, DecideOptions{}, std::nullopt, true);
  int pass = 0, skipped = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto const& r = results[i];
    t.expect(r.status != EntryStatus::Fail, r.name + " failed");
    if (entries[i].awaiting_transcription()) {
      t.expect(r.status == EntryStatus::Skipped && !r.claims.empty(),
               r.name + " should be skipped with its expectations");
      ++skipped;
    }
    pass += r.status == EntryStatus::Pass;
  }
  return finish(t, seconds_since(t0), kCorpusLimit,
                std::to_string(pass) + " passed, " + std::to_string(skipped) + " skipped");
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"RACG verdict table", verdict_table},
      {"RAAG verdict table", raag_table},
      {"class C matches the fixed-point oracle", class_oracle},
      {"class C excludes circle obstructions", exclusion},
      {"CFS suite", cfs_suite},
      {"normal forms match the shortlex oracle", word_oracle},
      {"itineraries match the Bass-Serre oracle", itinerary_suite},
      {"cutset sampling", cutset_sampling},
      {"certificate replay and JSON round trip", certificate_replay},
      {"corpus run", corpus_run},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << " - " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
