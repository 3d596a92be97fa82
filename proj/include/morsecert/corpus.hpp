#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "morsecert/class_c.hpp"
#include "morsecert/graph.hpp"

namespace morsecert {

// Named example graphs.
SimplicialGraph cycle_graph(int n, std::string const& prefix = "v");
SimplicialGraph path_graph(int n);      // a-b-c-...
SimplicialGraph edgeless_graph(int n);  // a b c ...
SimplicialGraph complete_graph(int n);  // a b c ...
SimplicialGraph complete_bipartite_2_3();
/// 6-cycle v1..v6 plus a vertex u adjacent to v1 and v3.
SimplicialGraph glued_six_cycle();

/// An expected property value and the fact backing it.
struct Claim {
  std::string property;
  std::string expected;
  std::string backing;
};

struct CorpusEntry {
  std::string name;
  std::string source;
  /// Absent for entries awaiting a transcribed edge list.
  std::optional<SimplicialGraph> graph;
  std::vector<Claim> claims;

  bool awaiting_transcription() const { return !graph.has_value(); }
};

/// Properties a claim may name: racg_verdict, raag_verdict, class_c,
/// class_c_kind, class_c_prime, class_c_prime_kind, charney_sultan, cfs,
/// cfs0, cfs0_reason, planar, circle_obstruction, four_cycle_nodes.
std::vector<std::string> const& claim_properties();

/// Current value of a property, rendered as in claims. Throws
/// InvalidArgument for an unknown property.
std::string evaluate_property(SimplicialGraph const& g, std::string const& property,
                              DecideOptions const& opts = {});

std::vector<CorpusEntry> corpus_entries();

struct ClaimResult {
  Claim claim;
  std::string actual;
  bool pass = false;
};

enum class EntryStatus { Pass, Fail, Skipped };

struct EntryResult {
  std::string name;
  EntryStatus status = EntryStatus::Skipped;
  std::vector<ClaimResult> claims;
  std::string error;
};

std::string_view to_string(EntryStatus s);

/// Checks every claim; entries without a graph are skipped. With
/// `graph_dir`, a file <graph_dir>/<name>.graph supplies a missing graph.
EntryResult evaluate_entry(CorpusEntry const& entry, DecideOptions const& opts = {});
std::vector<EntryResult> run_corpus(std::vector<CorpusEntry> entries, DecideOptions const& opts,
                                    std::optional<std::string> const& graph_dir, bool parallel);

nlohmann::json corpus_results_to_json(std::vector<CorpusEntry> const& entries,
                                      std::vector<EntryResult> const& results);

}  // namespace morsecert
