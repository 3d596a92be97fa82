#include "morsecert/classifier.hpp"

#include <array>

#include "morsecert/cycles.hpp"
#include "morsecert/errors.hpp"
#include "morsecert/graph_io.hpp"
#include "morsecert/obstruction.hpp"

namespace morsecert {

std::string_view to_string(GroupKind k) { return k == GroupKind::RACG ? "racg" : "raag"; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Empty: return "Empty";
    case Verdict::TwoPoints: return "TwoPoints";
    case Verdict::Cantor: return "Cantor";
    case Verdict::OmegaCantor: return "OmegaCantor";
    case Verdict::TotallyDisconnected: return "TotallyDisconnected";
    case Verdict::ContainsCircle: return "ContainsCircle";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

GroupKind group_kind_from_string(std::string_view s) {
  if (s == "racg" || s == "RACG") return GroupKind::RACG;
  if (s == "raag" || s == "RAAG") return GroupKind::RAAG;
  throw ParseError("unknown group kind '" + std::string(s) + "'");
}

Verdict verdict_from_string(std::string_view s) {
  for (auto v : {Verdict::Empty, Verdict::TwoPoints, Verdict::Cantor, Verdict::OmegaCantor,
                 Verdict::TotallyDisconnected, Verdict::ContainsCircle, Verdict::Unknown}) {
    if (to_string(v) == s) return v;
  }
  throw ParseError("unknown verdict '" + std::string(s) + "'");
}

std::string_view to_string(Justification j) {
  switch (j) {
    case Justification::TrivialGroup: return "trivial-group";
    case Justification::CliqueEmpty: return "clique-finite-group";
    case Justification::NontrivialJoinEmpty: return "nontrivial-join-product";
    case Justification::JoinEmpty: return "join-product";
    case Justification::TwoNonAdjacent: return "infinite-dihedral";
    case Justification::SuspensionOfClique: return "suspension-of-clique";
    case Justification::SingleVertex: return "infinite-cyclic";
    case Justification::ClassCNoFourCycle: return "class-C-hyperbolic";
    case Justification::ClassCFourCycle: return "class-C-four-cycle";
    case Justification::ClassCPrime: return "class-C-prime";
    case Justification::CircleObstruction: return "circle-obstruction";
    case Justification::Exhausted: return "exhausted";
    case Justification::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

BoundaryVerdict make(GroupKind k, Verdict v, Justification j, std::string reason) {
  BoundaryVerdict out;
  out.group = k;
  out.verdict = v;
  out.justification = j;
  out.reason = std::move(reason);
  return out;
}

}  // namespace

BoundaryVerdict classify_racg(SimplicialGraph const& g, DecideOptions const& opts) {
  constexpr auto K = GroupKind::RACG;
  VertexSet all = g.vertices();
  if (is_clique(g)) {
    return make(K, Verdict::Empty, Justification::CliqueEmpty,
                "defining graph is a clique, so the group is finite");
  }
  if (is_nontrivial_join(g, all)) {
    auto v = make(K, Verdict::Empty, Justification::NontrivialJoinEmpty,
                  "defining graph is a non-trivial join, so the group is a product of two "
                  "infinite groups");
    v.join = join_split(g);
    return v;
  }
  if (g.size() == 2) {
    auto v = make(K, Verdict::TwoPoints, Justification::TwoNonAdjacent,
                  "two non-adjacent vertices: the infinite dihedral group");
    v.suspension = SuspensionWitness{all, VertexSet()};
    return v;
  }
  if (auto s = is_suspension_of_clique(g)) {
    auto v = make(K, Verdict::TwoPoints, Justification::SuspensionOfClique,
                  "suspension of a clique: virtually infinite cyclic");
    v.suspension = s;
    return v;
  }
  std::optional<std::string> budget_note;
  try {
    Certificate cert = decide_class_c(g, opts);
    if (cert.member()) {
      auto fours = induced_four_cycles(g);
      if (fours.empty()) {
        auto v = make(K, Verdict::Cantor, Justification::ClassCNoFourCycle,
                      "in class C and no induced 4-cycle: totally disconnected and hyperbolic");
        v.certificate = std::move(cert);
        return v;
      }
      auto v = make(K, Verdict::OmegaCantor, Justification::ClassCFourCycle,
                    "in class C with an induced 4-cycle: totally disconnected, not hyperbolic");
      v.certificate = std::move(cert);
      v.four_cycle = fours.front();
      return v;
    }
  } catch (BudgetExceeded const& e) {
    // The obstruction does not depend on the class search, so it is still
    // worth looking for.
    budget_note = e.what();
  }
  try {
    if (auto c = find_circle_obstruction(g, opts.cycle_budget)) {
      auto v = make(K, Verdict::ContainsCircle, Justification::CircleObstruction,
                    "induced cycle of length at least 5 without a glued 4-cycle");
      v.circle = c;
      return v;
    }
  } catch (BudgetExceeded const& e) {
    budget_note = budget_note ? *budget_note + "; " + e.what() : std::string(e.what());
  }
  if (budget_note) return make(K, Verdict::Unknown, Justification::BudgetExceeded, *budget_note);
  return make(K, Verdict::Unknown, Justification::Exhausted,
              "not in class C and no circle obstruction");
}

BoundaryVerdict classify_raag(SimplicialGraph const& g, DecideOptions const& opts) {
  constexpr auto K = GroupKind::RAAG;
  if (g.size() == 0) {
    return make(K, Verdict::Empty, Justification::TrivialGroup, "empty graph: trivial group");
  }
  if (g.size() >= 2) {
    if (auto j = join_split(g)) {
      auto v = make(K, Verdict::Empty, Justification::JoinEmpty,
                    "join of two non-empty graphs: product of two infinite groups");
      v.join = j;
      return v;
    }
  }
  if (g.size() == 1) {
    return make(K, Verdict::TwoPoints, Justification::SingleVertex,
                "single vertex: the infinite cyclic group");
  }
  try {
    Certificate cert = decide_class_c_prime(g, opts);
    if (cert.member()) {
      auto v = make(K, Verdict::TotallyDisconnected, Justification::ClassCPrime,
                    "in class C'");
      v.certificate = std::move(cert);
      return v;
    }
  } catch (BudgetExceeded const& e) {
    return make(K, Verdict::Unknown, Justification::BudgetExceeded, e.what());
  }
  return make(K, Verdict::Unknown, Justification::Exhausted, "not in class C'");
}

BoundaryVerdict classify(SimplicialGraph const& g, GroupKind kind, DecideOptions const& opts) {
  return kind == GroupKind::RACG ? classify_racg(g, opts) : classify_raag(g, opts);
}

namespace {

bool clique(SimplicialGraph const& g, VertexSet s) {
  for (Vertex u : s) {
    for (Vertex v : s) {
      if (u < v && !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

ReplayResult bad(std::string m) { return {false, std::move(m)}; }
ReplayResult good() { return {true, {}}; }

ReplayResult check_join_witness(SimplicialGraph const& g, std::optional<JoinWitness> const& j,
                                bool need_nontrivial) {
  if (!j) return bad("missing join witness");
  if (!is_join_partition(g, g.vertices(), j->side_a, j->side_b)) return bad("not a join");
  bool nt = !clique(g, j->side_a) && !clique(g, j->side_b);
  if (need_nontrivial && !nt) return bad("join is trivial");
  return good();
}

bool has_induced_four_cycle(SimplicialGraph const& g) {
  int n = g.size();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          // Three ways to arrange four vertices on a cycle.
          for (auto [p, q, r, s] : {std::array{a, b, c, d}, std::array{a, b, d, c},
                                    std::array{a, c, b, d}}) {
            std::array<Vertex, 4> cyc{p, q, r, s};
            if (is_induced_cycle(g, cyc)) return true;
          }
        }
  return false;
}

Verdict verdict_of(Justification j) {
  switch (j) {
    case Justification::TrivialGroup:
    case Justification::CliqueEmpty:
    case Justification::NontrivialJoinEmpty:
    case Justification::JoinEmpty: return Verdict::Empty;
    case Justification::TwoNonAdjacent:
    case Justification::SuspensionOfClique:
    case Justification::SingleVertex: return Verdict::TwoPoints;
    case Justification::ClassCNoFourCycle: return Verdict::Cantor;
    case Justification::ClassCFourCycle: return Verdict::OmegaCantor;
    case Justification::ClassCPrime: return Verdict::TotallyDisconnected;
    case Justification::CircleObstruction: return Verdict::ContainsCircle;
    case Justification::Exhausted:
    case Justification::BudgetExceeded: return Verdict::Unknown;
  }
  return Verdict::Unknown;
}

// Rules that only make sense for one family; nullopt for shared rules.
std::optional<GroupKind> group_of(Justification j) {
  switch (j) {
    case Justification::JoinEmpty:
    case Justification::SingleVertex:
    case Justification::ClassCPrime: return GroupKind::RAAG;
    case Justification::CliqueEmpty:
    case Justification::NontrivialJoinEmpty:
    case Justification::TwoNonAdjacent:
    case Justification::SuspensionOfClique:
    case Justification::ClassCNoFourCycle:
    case Justification::ClassCFourCycle:
    case Justification::CircleObstruction: return GroupKind::RACG;
    default: return std::nullopt;
  }
}

}  // namespace

ReplayResult replay(SimplicialGraph const& g, BoundaryVerdict const& v) {
  if (v.verdict != verdict_of(v.justification)) return bad("verdict does not match its rule");
  if (auto k = group_of(v.justification); k && *k != v.group) {
    return bad("rule does not apply to this group");
  }
  switch (v.justification) {
    case Justification::TrivialGroup:
      return g.size() == 0 ? good() : bad("graph is not empty");
    case Justification::CliqueEmpty:
      return clique(g, g.vertices()) ? good() : bad("graph is not a clique");
    case Justification::NontrivialJoinEmpty:
      return check_join_witness(g, v.join, true);
    case Justification::JoinEmpty:
      return check_join_witness(g, v.join, false);
    case Justification::TwoNonAdjacent:
      return g.size() == 2 && !g.adjacent(0, 1) ? good() : bad("not two non-adjacent vertices");
    case Justification::SuspensionOfClique: {
      if (!v.suspension) return bad("missing suspension witness");
      auto const& s = *v.suspension;
      auto pair = s.pair.members();
      if (pair.size() != 2 || g.adjacent(pair[0], pair[1])) return bad("bad suspension pair");
      if (s.clique.empty() || s.clique.intersects(s.pair) ||
          (s.clique | s.pair) != g.vertices() || !clique(g, s.clique)) {
        return bad("bad suspension clique");
      }
      for (Vertex x : s.clique) {
        if (!g.adjacent(x, pair[0]) || !g.adjacent(x, pair[1])) return bad("not a suspension");
      }
      return good();
    }
    case Justification::SingleVertex:
      return g.size() == 1 ? good() : bad("not a single vertex");
    case Justification::ClassCNoFourCycle:
    case Justification::ClassCFourCycle:
    case Justification::ClassCPrime: {
      if (!v.certificate) return bad("missing certificate");
      auto want = v.justification == Justification::ClassCPrime ? GraphClass::CPrime
                                                                 : GraphClass::C;
      if (v.certificate->graph_class != want) return bad("certificate for the wrong class");
      if (v.certificate->support != g.vertices()) return bad("certificate for a subgraph");
      if (auto r = replay(g, *v.certificate); !r) return r;
      if (v.justification == Justification::ClassCNoFourCycle && has_induced_four_cycle(g)) {
        return bad("graph has an induced 4-cycle");
      }
      if (v.justification == Justification::ClassCFourCycle) {
        if (!v.four_cycle || !is_induced_cycle(g, v.four_cycle->vertices) ||
            v.four_cycle->length() != 4) {
          return bad("missing or invalid 4-cycle witness");
        }
      }
      return good();
    }
    case Justification::CircleObstruction: {
      if (!v.circle) return bad("missing cycle");
      auto const& c = *v.circle;
      if (c.length() < 5 || !is_induced_cycle(g, c.vertices)) return bad("not an induced cycle");
      VertexSet on = c.support();
      // No induced 4-cycle may contain a pair of cycle vertices that are
      // non-adjacent in g: such a pair would be a diagonal a-b of a 4-cycle
      // a-x-b-y, so check every common non-adjacent neighbour pair.
      for (Vertex a : on) {
        for (Vertex b : on) {
          if (b <= a || g.adjacent(a, b)) continue;
          for (Vertex x = 0; x < g.size(); ++x) {
            for (Vertex y = x + 1; y < g.size(); ++y) {
              if (x == a || x == b || y == a || y == b) continue;
              if (g.adjacent(x, y)) continue;
              if (g.adjacent(a, x) && g.adjacent(x, b) && g.adjacent(b, y) && g.adjacent(y, a)) {
                return bad("cycle has a glued 4-cycle");
              }
            }
          }
        }
      }
      return good();
    }
    case Justification::Exhausted:
    case Justification::BudgetExceeded:
      return bad("Unknown verdicts carry no witness");
  }
  return bad("unknown justification");
}

nlohmann::json verdict_to_json(SimplicialGraph const& g, BoundaryVerdict const& v) {
  nlohmann::json witness = nullptr;
  if (v.join) witness = join_to_json(g, *v.join);
  if (v.suspension) {
    witness = {{"pair", labels_json(g, v.suspension->pair)},
               {"clique", labels_json(g, v.suspension->clique)}};
  }
  if (v.certificate) {
    witness = {{"certificate", certificate_to_json(g, *v.certificate)}};
    if (v.four_cycle) witness["four_cycle"] = cycle_to_json(g, *v.four_cycle);
  }
  if (v.circle) witness = {{"cycle", cycle_to_json(g, *v.circle)}};
  return {{"group", to_string(v.group)},
          {"verdict", to_string(v.verdict)},
          {"justification", {{"rule", to_string(v.justification)}, {"reason", v.reason}}},
          {"witness", witness}};
}

}  // namespace morsecert
