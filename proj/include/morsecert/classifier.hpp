#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "morsecert/certificate.hpp"
#include "morsecert/class_c.hpp"
#include "morsecert/graph.hpp"

namespace morsecert {

enum class GroupKind { RACG, RAAG };

enum class Verdict {
  Empty,
  TwoPoints,
  Cantor,
  OmegaCantor,
  TotallyDisconnected,
  ContainsCircle,
  Unknown,
};

std::string_view to_string(GroupKind k);
std::string_view to_string(Verdict v);
GroupKind group_kind_from_string(std::string_view s);
Verdict verdict_from_string(std::string_view s);

/// Which decidable fact a verdict rests on.
enum class Justification {
  TrivialGroup,        // no vertices
  CliqueEmpty,         // RACG: clique => finite group
  NontrivialJoinEmpty, // RACG: non-trivial join => product of infinite groups
  JoinEmpty,           // RAAG: join of two non-empty graphs
  TwoNonAdjacent,      // RACG: infinite dihedral group
  SuspensionOfClique,  // RACG: virtually infinite cyclic
  SingleVertex,        // RAAG: infinite cyclic group
  ClassCNoFourCycle,   // in C, hyperbolic => Cantor space
  ClassCFourCycle,     // in C, induced 4-cycle => omega-Cantor space
  ClassCPrime,         // RAAG in C'
  CircleObstruction,   // induced cycle >= 5 without glued 4-cycle
  Exhausted,           // no rule applies
  BudgetExceeded,      // a search stopped early
};

std::string_view to_string(Justification j);

struct BoundaryVerdict {
  GroupKind group = GroupKind::RACG;
  Verdict verdict = Verdict::Unknown;
  Justification justification = Justification::Exhausted;
  std::string reason;

  // Witness, by justification.
  std::optional<JoinWitness> join;
  std::optional<SuspensionWitness> suspension;
  std::optional<Certificate> certificate;
  std::optional<Cycle> four_cycle;  // ClassCFourCycle
  std::optional<Cycle> circle;      // CircleObstruction
};

/// Ladder: clique or non-trivial join => Empty; two non-adjacent vertices or
/// suspension of a clique => TwoPoints; member of C => Cantor without an
/// induced 4-cycle, OmegaCantor with one; circle obstruction =>
/// ContainsCircle; otherwise Unknown. A budget overrun yields Unknown with
/// the reason recorded.
BoundaryVerdict classify_racg(SimplicialGraph const& g, DecideOptions const& opts = {});

/// Ladder: join of two non-empty graphs => Empty; single vertex =>
/// TwoPoints; member of C' => TotallyDisconnected; otherwise Unknown.
BoundaryVerdict classify_raag(SimplicialGraph const& g, DecideOptions const& opts = {});

BoundaryVerdict classify(SimplicialGraph const& g, GroupKind kind,
                         DecideOptions const& opts = {});

/// Re-validates the witness of a non-Unknown verdict against g, using the
/// certificate replay checker and direct adjacency checks.
ReplayResult replay(SimplicialGraph const& g, BoundaryVerdict const& v);

nlohmann::json verdict_to_json(SimplicialGraph const& g, BoundaryVerdict const& v);

}  // namespace morsecert
