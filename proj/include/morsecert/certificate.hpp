#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "morsecert/graph.hpp"

namespace morsecert {

/// Which recursively defined graph class a certificate speaks about: the
/// right-angled Coxeter class, or its Artin variant in which every join of
/// two non-empty graphs is a base case.
enum class GraphClass { C, CPrime };

enum class CertKind {
  Edgeless,
  Tree,
  Clique,
  NontrivialJoin,
  Join,  // C' only: a join of two non-empty graphs, trivial or not
  CharneySultan,
  Split,
  Refuted,
};

/// How the intersection of the two split pieces qualifies.
enum class LambdaCondition { Empty, Clique, InNontrivialJoin };

std::string_view to_string(GraphClass c);
std::string_view to_string(CertKind k);
std::string_view to_string(LambdaCondition c);
GraphClass graph_class_from_string(std::string_view s);
CertKind cert_kind_from_string(std::string_view s);
LambdaCondition lambda_condition_from_string(std::string_view s);

/// An induced cycle C of length >= 5 and an induced non-trivial join J
/// whose union is the graph.
struct CharneySultanWitness {
  Cycle cycle;
  VertexSet join_vertices;
  JoinWitness join;

  bool operator==(CharneySultanWitness const&) const = default;
};

/// Cover of a graph by two proper induced subgraphs on `lambda1`, `lambda2`
/// meeting in `lambda`. For InNontrivialJoin, `condition_join` holds two
/// disjoint vertex sets, each containing a non-edge, completely joined to
/// each other, whose union contains `lambda`.
struct SplitWitness {
  VertexSet lambda1;
  VertexSet lambda2;
  VertexSet lambda;
  LambdaCondition condition = LambdaCondition::Empty;
  std::optional<JoinWitness> condition_join;

  bool operator==(SplitWitness const&) const = default;
};

struct RefutationRecord {
  bool exhaustive = true;
  std::uint64_t subgraphs_explored = 0;
  std::uint64_t splits_examined = 0;

  bool operator==(RefutationRecord const&) const = default;
};

/// Derivation tree witnessing that g[support] belongs to a graph class, or
/// a record that the exhaustive search found no derivation.
struct Certificate {
  GraphClass graph_class = GraphClass::C;
  CertKind kind = CertKind::Refuted;
  VertexSet support;
  std::optional<JoinWitness> join;                     // NontrivialJoin, Join
  std::optional<CharneySultanWitness> charney_sultan;  // CharneySultan
  std::optional<SplitWitness> split;                   // Split
  std::optional<RefutationRecord> refutation;          // Refuted
  std::vector<Certificate> children;                   // Split: [lambda1, lambda2]

  bool member() const { return kind != CertKind::Refuted; }
  /// Number of nodes in the derivation tree.
  std::size_t node_count() const;
  bool operator==(Certificate const&) const = default;
};

struct ReplayResult {
  bool ok = false;
  std::string error;
  explicit operator bool() const { return ok; }
};

/// Re-checks every node of a member certificate directly against the
/// definitions, without consulting the search that produced it. Refuted
/// certificates never replay.
ReplayResult replay(SimplicialGraph const& g, Certificate const& cert);

nlohmann::json certificate_to_json(SimplicialGraph const& g, Certificate const& cert);
/// Inverse of certificate_to_json. Throws ParseError on malformed input.
Certificate certificate_from_json(SimplicialGraph const& g, nlohmann::json const& j);

/// Derivation tree in Graphviz DOT.
std::string certificate_to_dot(SimplicialGraph const& g, Certificate const& cert);

nlohmann::json join_to_json(SimplicialGraph const& g, JoinWitness const& w);
JoinWitness join_from_json(SimplicialGraph const& g, nlohmann::json const& j);
nlohmann::json cycle_to_json(SimplicialGraph const& g, Cycle const& c);
Cycle cycle_from_json(SimplicialGraph const& g, nlohmann::json const& j);

}  // namespace morsecert
