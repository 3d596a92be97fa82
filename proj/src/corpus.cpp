#include "morsecert/corpus.hpp"

#include <filesystem>

#include "morsecert/cfs.hpp"
#include "morsecert/classifier.hpp"
#include "morsecert/errors.hpp"
#include "morsecert/graph_io.hpp"
#include "morsecert/obstruction.hpp"

namespace morsecert {

namespace {

std::vector<std::string> letter_labels(int n) {
  if (n > 26) throw InvalidArgument("at most 26 letter labels");
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

using EdgeList = std::vector<std::pair<std::string, std::string>>;

}  // namespace

SimplicialGraph cycle_graph(int n, std::string const& prefix) {
  std::vector<std::string> labels;
  EdgeList edges;
  for (int i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  for (int i = 0; i < n; ++i) edges.emplace_back(labels[i], labels[(i + 1) % n]);
  return SimplicialGraph(labels, edges);
}

SimplicialGraph path_graph(int n) {
  auto labels = letter_labels(n);
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(labels[i], labels[i + 1]);
  return SimplicialGraph(labels, edges);
}

SimplicialGraph edgeless_graph(int n) { return SimplicialGraph(letter_labels(n), {}); }

SimplicialGraph complete_graph(int n) {
  auto labels = letter_labels(n);
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(labels[i], labels[j]);
  }
  return SimplicialGraph(labels, edges);
}

SimplicialGraph complete_bipartite_2_3() {
  EdgeList edges;
  for (auto a : {"a", "b"}) {
    for (auto x : {"x", "y", "z"}) edges.emplace_back(a, x);
  }
  return SimplicialGraph({"a", "b", "x", "y", "z"}, edges);
}

SimplicialGraph glued_six_cycle() {
  auto c6 = cycle_graph(6);
  EdgeList edges;
  for (auto [u, v] : c6.edges()) edges.emplace_back(c6.label(u), c6.label(v));
  edges.emplace_back("u", "v1");
  edges.emplace_back("u", "v3");
  auto labels = c6.labels();
  labels.push_back("u");
  return SimplicialGraph(labels, edges);
}

std::vector<std::string> const& claim_properties() {
  static std::vector<std::string> const props{
      "racg_verdict", "raag_verdict",   "class_c",     "class_c_kind",
      "class_c_prime", "class_c_prime_kind", "charney_sultan", "cfs",
      "cfs0",          "cfs0_reason",   "planar",      "circle_obstruction",
      "four_cycle_nodes"};
  return props;
}

std::string evaluate_property(SimplicialGraph const& g, std::string const& property,
                              DecideOptions const& opts) {
  auto yes_no = [](bool b) { return std::string(b ? "true" : "false"); };
  if (property == "racg_verdict") {
    return std::string(to_string(classify_racg(g, opts).verdict));
  }
  if (property == "raag_verdict") {
    return std::string(to_string(classify_raag(g, opts).verdict));
  }
  if (property == "class_c" || property == "class_c_prime") {
    auto cls = property == "class_c" ? GraphClass::C : GraphClass::CPrime;
    return decide(g, cls, opts).member() ? "member" : "refuted";
  }
  if (property == "class_c_kind" || property == "class_c_prime_kind") {
    auto cls = property == "class_c_kind" ? GraphClass::C : GraphClass::CPrime;
    return std::string(to_string(decide(g, cls, opts).kind));
  }
  if (property == "charney_sultan") {
    return yes_no(is_connected(g, g.vertices()) && is_charney_sultan(g, opts.cycle_budget));
  }
  if (property == "cfs") return yes_no(is_cfs(g));
  if (property == "cfs0") return yes_no(is_cfs0(g).member);
  if (property == "cfs0_reason") return is_cfs0(g).reason;
  if (property == "planar") return yes_no(is_planar(g));
  if (property == "circle_obstruction") {
    return find_circle_obstruction(g, opts.cycle_budget) ? "present" : "absent";
  }
  if (property == "four_cycle_nodes") {
    return std::to_string(four_cycle_graph(g).nodes.size());
  }
  throw InvalidArgument("unknown property '" + property + "'");
}

std::vector<CorpusEntry> corpus_entries() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, std::string source, std::optional<SimplicialGraph> g,
                 std::vector<Claim> claims) {
    out.push_back(CorpusEntry{std::move(name), std::move(source), std::move(g),
                              std::move(claims)});
  };
  std::string const caprace = "clique or non-trivial join: empty Morse boundary";
  std::string const suspension = "two non-adjacent vertices or suspension of a clique: "
                                 "virtually cyclic, two boundary points";

  add("C4", "square; the Davis complex is the Euclidean plane", cycle_graph(4),
      {{"racg_verdict", "Empty", "the 4-cycle is a non-trivial join (flat plane)"},
       {"class_c", "member", "non-trivial joins are base cases of class C"},
       {"cfs", "true", "one 4-cycle supported on all vertices"},
       {"cfs0", "false", "CFS0 requires at least five vertices"},
       {"cfs0_reason", cfs_reason::kTooSmall, "CFS0 requires at least five vertices"}});
  add("C5", "pentagon; the Davis complex is the hyperbolic plane", cycle_graph(5),
      {{"racg_verdict", "ContainsCircle", "the Morse boundary of a pentagon group is a circle"},
       {"circle_obstruction", "present", "a 5-cycle with no 4-cycle glued to it"},
       {"class_c", "refuted", "a circle rules out total disconnectedness"}});
  add("C6", "hexagon; hyperbolic surface group", cycle_graph(6),
      {{"racg_verdict", "ContainsCircle", "a 6-cycle with no 4-cycle glued to it"},
       {"class_c", "refuted", "a circle rules out total disconnectedness"}});
  add("C6g", "two induced 6-cycles, each with a glued 4-cycle", glued_six_cycle(),
      {{"racg_verdict", "OmegaCantor", "Charney-Sultan graph containing an induced 4-cycle"},
       {"class_c_kind", "CharneySultan", "a 6-cycle together with the 4-cycle u v1 v2 v3"},
       {"circle_obstruction", "absent", "both induced 6-cycles have glued 4-cycles"},
       {"cfs", "false", "the only 4-cycle supports 4 of 7 vertices"},
       {"cfs0_reason", cfs_reason::kNotCfs, "the only 4-cycle supports 4 of 7 vertices"},
       {"planar", "true", "drawn in the plane with u inside the hexagon"}});
  add("P3", "path on three vertices", path_graph(3),
      {{"racg_verdict", "TwoPoints", suspension},
       {"raag_verdict", "Empty", "join of two non-empty graphs: product of infinite groups"},
       {"class_c_prime_kind", "Join", "every join of two non-empty graphs is in class C'"}});
  add("P4", "path on four vertices", path_graph(4),
      {{"racg_verdict", "Cantor", "a tree in class C without induced 4-cycles"},
       {"class_c_kind", "Tree", "finite trees are base cases of class C"}});
  add("E2", "two isolated vertices", edgeless_graph(2),
      {{"racg_verdict", "TwoPoints", "the infinite dihedral group"}});
  add("E3", "three isolated vertices", edgeless_graph(3),
      {{"racg_verdict", "Cantor", "free product of three involutions, virtually free"},
       {"class_c_kind", "Edgeless", "edgeless graphs are base cases of class C"}});
  for (int n = 1; n <= 4; ++n) {
    std::vector<Claim> claims{{"racg_verdict", "Empty", caprace + " (finite group)"}};
    claims.push_back(n == 1 ? Claim{"raag_verdict", "TwoPoints", "the infinite cyclic group"}
                            : Claim{"raag_verdict", "Empty", "free abelian group of rank >= 2"});
    add("K" + std::to_string(n),
        "complete graph on " + std::to_string(n) + (n == 1 ? " vertex" : " vertices"),
        complete_graph(n), claims);
  }
  add("K23", "complete bipartite graph K_{2,3}", complete_bipartite_2_3(),
      {{"racg_verdict", "Empty", caprace},
       {"four_cycle_nodes", "3", "three 4-cycles through the pair a, b"},
       {"cfs0", "true", "every CFS0 clause holds"}});
  add("croke-kleiner", "Croke-Kleiner path for right-angled Artin groups", path_graph(4),
      {{"raag_verdict", "TotallyDisconnected", "the path is a tree, hence in class C'"},
       {"class_c_prime_kind", "Tree", "finite trees are base cases of class C'"}});

  // Entries whose edge lists only exist as drawings. They stay skipped
  // until a graph file is supplied.
  add("c-not-cfs0-a", "first example graph in class C but not CFS0 (drawing)", std::nullopt,
      {{"class_c", "member", "the graph decomposes in class C"},
       {"cfs0", "false", "it lies outside CFS0"},
       {"planar", "false", "the graph is not planar"}});
  add("c-not-cfs0-b", "second example graph in class C but not CFS0 (drawing)", std::nullopt,
      {{"class_c", "member", "the graph decomposes in class C"},
       {"cfs0", "false", "it lies outside CFS0"}});
  add("charney-sultan-drawn", "Charney-Sultan graph with its decomposition (drawing)",
      std::nullopt,
      {{"charney_sultan", "true", "a long cycle and a non-trivial join covering the graph"},
       {"class_c", "member", "Charney-Sultan graphs are base cases of class C"}});
  add("dani-thomas", "Dani-Thomas graph, index at least 3 (drawing)", std::nullopt,
      {{"class_c", "member", "splits into a tree and a join along a clique"},
       {"cfs", "false", "not CFS from the third graph of the family on"}});
  add("ben-zvi", "Ben-Zvi graph (drawing)", std::nullopt,
      {{"class_c", "member", "two Charney-Sultan pieces meeting in a 4-cycle"},
       {"four_cycle_nodes", "1", "the graph contains a single 4-cycle"}});
  return out;
}

std::string_view to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::Pass: return "pass";
    case EntryStatus::Fail: return "fail";
    case EntryStatus::Skipped: return "skipped";
  }
  return "?";
}

EntryResult evaluate_entry(CorpusEntry const& entry, DecideOptions const& opts) {
  EntryResult r;
  r.name = entry.name;
  if (entry.awaiting_transcription()) {
    r.status = EntryStatus::Skipped;
    for (auto const& c : entry.claims) r.claims.push_back(ClaimResult{c, {}, false});
    return r;
  }
  r.status = EntryStatus::Pass;
  try {
    for (auto const& c : entry.claims) {
      auto actual = evaluate_property(*entry.graph, c.property, opts);
      bool pass = actual == c.expected;
      if (!pass) r.status = EntryStatus::Fail;
      r.claims.push_back(ClaimResult{c, actual, pass});
    }
  } catch (Error const& e) {
    r.status = EntryStatus::Fail;
    r.error = e.what();
  }
  return r;
}

std::vector<EntryResult> run_corpus(std::vector<CorpusEntry> entries, DecideOptions const& opts,
                                    std::optional<std::string> const& graph_dir, bool parallel) {
  if (graph_dir) {
    for (auto& e : entries) {
      auto file = std::filesystem::path(*graph_dir) / (e.name + ".graph");
      if (!e.graph && std::filesystem::exists(file)) e.graph = read_graph_file(file.string());
    }
  }
  std::vector<EntryResult> out(entries.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t i = 0; i < entries.size(); ++i) out[i] = evaluate_entry(entries[i], opts);
  return out;
}

nlohmann::json corpus_results_to_json(std::vector<CorpusEntry> const& entries,
                                      std::vector<EntryResult> const& results) {
  nlohmann::json rows = nlohmann::json::array();
  int counts[3] = {0, 0, 0};
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto const& r = results[i];
    ++counts[static_cast<int>(r.status)];
    nlohmann::json claims = nlohmann::json::array();
    for (auto const& c : r.claims) {
      nlohmann::json row{{"property", c.claim.property},
                         {"expected", c.claim.expected},
                         {"backing", c.claim.backing}};
      if (r.status != EntryStatus::Skipped) {
        row["actual"] = c.actual;
        row["pass"] = c.pass;
      }
      claims.push_back(row);
    }
    nlohmann::json row{{"name", r.name},
                       {"source", i < entries.size() ? entries[i].source : ""},
                       {"status", to_string(r.status)},
                       {"claims", claims}};
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(row);
  }
  return {{"entries", rows},
          {"summary", {{"pass", counts[0]}, {"fail", counts[1]}, {"skipped", counts[2]}}}};
}

}  // namespace morsecert
