#include "morsecert/certificate.hpp"

#include <sstream>

#include "morsecert/errors.hpp"
#include "morsecert/graph_io.hpp"

namespace morsecert {

std::string_view to_string(GraphClass c) { return c == GraphClass::C ? "C" : "C'"; }

std::string_view to_string(CertKind k) {
  switch (k) {
    case CertKind::Edgeless: return "Edgeless";
    case CertKind::Tree: return "Tree";
    case CertKind::Clique: return "Clique";
    case CertKind::NontrivialJoin: return "NontrivialJoin";
    case CertKind::Join: return "Join";
    case CertKind::CharneySultan: return "CharneySultan";
    case CertKind::Split: return "Split";
    case CertKind::Refuted: return "Refuted";
  }
  return "?";
}

std::string_view to_string(LambdaCondition c) {
  switch (c) {
    case LambdaCondition::Empty: return "empty";
    case LambdaCondition::Clique: return "clique";
    case LambdaCondition::InNontrivialJoin: return "in-nontrivial-join";
  }
  return "?";
}

GraphClass graph_class_from_string(std::string_view s) {
  if (s == "C") return GraphClass::C;
  if (s == "C'") return GraphClass::CPrime;
  throw ParseError("unknown graph class '" + std::string(s) + "'");
}

CertKind cert_kind_from_string(std::string_view s) {
  for (auto k : {CertKind::Edgeless, CertKind::Tree, CertKind::Clique,
                 CertKind::NontrivialJoin, CertKind::Join, CertKind::CharneySultan,
                 CertKind::Split, CertKind::Refuted}) {
    if (to_string(k) == s) return k;
  }
  throw ParseError("unknown certificate kind '" + std::string(s) + "'");
}

LambdaCondition lambda_condition_from_string(std::string_view s) {
  for (auto c : {LambdaCondition::Empty, LambdaCondition::Clique,
                 LambdaCondition::InNontrivialJoin}) {
    if (to_string(c) == s) return c;
  }
  throw ParseError("unknown intersection condition '" + std::string(s) + "'");
}

std::size_t Certificate::node_count() const {
  std::size_t n = 1;
  for (auto const& c : children) n += c.node_count();
  return n;
}

// ---------------------------------------------------------------------------
// Replay. Every check below is phrased directly in terms of adjacency so the
// checker shares nothing with the search beyond the graph itself.

namespace {

bool all_adjacent(SimplicialGraph const& g, VertexSet s) {
  for (Vertex u : s) {
    for (Vertex v : s) {
      if (u < v && !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

bool has_non_edge(SimplicialGraph const& g, VertexSet s) { return !all_adjacent(g, s); }

bool complete_across(SimplicialGraph const& g, VertexSet a, VertexSet b) {
  for (Vertex u : a) {
    for (Vertex v : b) {
      if (!g.adjacent(u, v)) return false;
    }
  }
  return true;
}

bool connected(SimplicialGraph const& g, VertexSet s) {
  if (s.empty()) return true;
  std::vector<Vertex> stack{s.first()};
  VertexSet seen = VertexSet::single(s.first());
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : s) {
      if (!seen.contains(w) && g.adjacent(v, w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen == s;
}

int count_edges(SimplicialGraph const& g, VertexSet s) {
  int m = 0;
  for (Vertex u : s) {
    for (Vertex v : s) {
      if (u < v && g.adjacent(u, v)) ++m;
    }
  }
  return m;
}

ReplayResult fail(std::string msg) { return {false, std::move(msg)}; }

std::string describe(SimplicialGraph const& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += g.label(v);
    first = false;
  }
  return out + "}";
}

ReplayResult check_join(SimplicialGraph const& g, VertexSet within, JoinWitness const& w,
                        bool need_nontrivial) {
  if (w.side_a.empty() || w.side_b.empty()) return fail("join side is empty");
  if (w.side_a.intersects(w.side_b)) return fail("join sides overlap");
  if ((w.side_a | w.side_b) != within) return fail("join sides do not cover the graph");
  if (!complete_across(g, w.side_a, w.side_b)) return fail("join sides are not fully linked");
  bool nontrivial = has_non_edge(g, w.side_a) && has_non_edge(g, w.side_b);
  if (w.nontrivial != nontrivial) return fail("join nontrivial flag is wrong");
  if (need_nontrivial && !nontrivial) return fail("join is trivial");
  return {true, {}};
}

ReplayResult check_cycle(SimplicialGraph const& g, VertexSet within, Cycle const& c) {
  auto const& vs = c.vertices;
  int n = c.length();
  if (n < 5) return fail("cycle shorter than 5");
  VertexSet s;
  for (Vertex v : vs) {
    if (!within.contains(v) || s.contains(v)) return fail("cycle vertex repeated or outside");
    s.insert(v);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      if (g.adjacent(vs[i], vs[j]) != consecutive) return fail("cycle is not induced");
    }
  }
  return {true, {}};
}

ReplayResult replay_node(SimplicialGraph const& g, Certificate const& c) {
  VertexSet s = c.support;
  std::string where = " at " + describe(g, s);
  auto sub = [&](ReplayResult r) {
    if (!r.ok) r.error += where;
    return r;
  };
  switch (c.kind) {
    case CertKind::Refuted:
      return fail("refuted certificate" + where);
    case CertKind::Edgeless:
      if (count_edges(g, s) != 0) return fail("graph has edges" + where);
      return {true, {}};
    case CertKind::Tree:
      if (s.empty() || !connected(g, s) || count_edges(g, s) != s.size() - 1) {
        return fail("graph is not a tree" + where);
      }
      return {true, {}};
    case CertKind::Clique:
      if (!all_adjacent(g, s)) return fail("graph is not a clique" + where);
      return {true, {}};
    case CertKind::NontrivialJoin:
    case CertKind::Join:
      if (!c.join) return fail("missing join witness" + where);
      return sub(check_join(g, s, *c.join, c.kind == CertKind::NontrivialJoin));
    case CertKind::CharneySultan: {
      if (!c.charney_sultan) return fail("missing Charney-Sultan witness" + where);
      auto const& w = *c.charney_sultan;
      if (!connected(g, s)) return fail("Charney-Sultan graph is disconnected" + where);
      if (auto r = check_cycle(g, s, w.cycle); !r) return sub(r);
      VertexSet cyc = w.cycle.support();
      VertexSet j = w.join_vertices;
      if (!j.subset_of(s)) return fail("join outside the graph" + where);
      if (cyc == s || j == s) return fail("pieces are not proper" + where);
      if ((cyc | j) != s) return fail("pieces do not cover the vertices" + where);
      if (all_adjacent(g, cyc & j)) {
        return fail("join meets the cycle in no non-adjacent pair" + where);
      }
      for (Vertex u : s) {
        for (Vertex v : s) {
          if (u >= v || !g.adjacent(u, v)) continue;
          bool in_cycle = cyc.contains(u) && cyc.contains(v);
          bool in_join = j.contains(u) && j.contains(v);
          if (!in_cycle && !in_join) {
            return fail("edge " + g.label(u) + "-" + g.label(v) + " in neither piece" + where);
          }
        }
      }
      return sub(check_join(g, j, w.join, true));
    }
    case CertKind::Split: {
      if (!c.split || c.children.size() != 2) return fail("malformed split" + where);
      auto const& w = *c.split;
      if ((w.lambda1 | w.lambda2) != s) return fail("split does not cover the vertices" + where);
      if (w.lambda1 == s || w.lambda2 == s) return fail("split piece is not proper" + where);
      if ((w.lambda1 & w.lambda2) != w.lambda) return fail("wrong intersection" + where);
      for (Vertex u : w.lambda1 - w.lambda) {
        for (Vertex v : w.lambda2 - w.lambda) {
          if (g.adjacent(u, v)) {
            return fail("edge " + g.label(u) + "-" + g.label(v) + " in neither piece" + where);
          }
        }
      }
      switch (w.condition) {
        case LambdaCondition::Empty:
          if (!w.lambda.empty()) return fail("intersection is not empty" + where);
          break;
        case LambdaCondition::Clique:
          if (!all_adjacent(g, w.lambda)) return fail("intersection is not a clique" + where);
          break;
        case LambdaCondition::InNontrivialJoin: {
          if (!w.condition_join) return fail("missing intersection join" + where);
          auto const& j = *w.condition_join;
          VertexSet u = j.side_a | j.side_b;
          if (!u.subset_of(s)) return fail("intersection join outside the graph" + where);
          if (!w.lambda.subset_of(u)) return fail("intersection not inside its join" + where);
          if (auto r = check_join(g, u, j, true); !r) return sub(r);
          break;
        }
      }
      if (c.children[0].support != w.lambda1 || c.children[1].support != w.lambda2) {
        return fail("children do not certify the split pieces" + where);
      }
      for (auto const& child : c.children) {
        if (child.graph_class != c.graph_class) return fail("mixed graph classes" + where);
        if (auto r = replay_node(g, child); !r) return r;
      }
      return {true, {}};
    }
  }
  return fail("unknown certificate kind");
}

}  // namespace

ReplayResult replay(SimplicialGraph const& g, Certificate const& cert) {
  if (!cert.support.subset_of(g.vertices())) return fail("certificate support outside graph");
  return replay_node(g, cert);
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json join_to_json(SimplicialGraph const& g, JoinWitness const& w) {
  return {{"side_a", labels_json(g, w.side_a)},
          {"side_b", labels_json(g, w.side_b)},
          {"nontrivial", w.nontrivial}};
}

JoinWitness join_from_json(SimplicialGraph const& g, nlohmann::json const& j) {
  try {
    return JoinWitness{labels_from_json(g, j.at("side_a")), labels_from_json(g, j.at("side_b")),
                       j.at("nontrivial").get<bool>()};
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("malformed join witness: ") + e.what());
  }
}

nlohmann::json cycle_to_json(SimplicialGraph const& g, Cycle const& c) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : c.vertices) out.push_back(g.label(v));
  return out;
}

Cycle cycle_from_json(SimplicialGraph const& g, nlohmann::json const& j) {
  if (!j.is_array()) throw ParseError("cycle must be an array of labels");
  Cycle c;
  for (auto const& l : j) {
    if (!l.is_string()) throw ParseError("cycle labels must be strings");
    auto v = g.find(l.get<std::string>());
    if (!v) throw ParseError("unknown vertex '" + l.get<std::string>() + "'");
    c.vertices.push_back(*v);
  }
  return c;
}

nlohmann::json certificate_to_json(SimplicialGraph const& g, Certificate const& c) {
  nlohmann::json witness = nlohmann::json::object();
  switch (c.kind) {
    case CertKind::NontrivialJoin:
    case CertKind::Join:
      if (c.join) witness = join_to_json(g, *c.join);
      break;
    case CertKind::CharneySultan:
      if (c.charney_sultan) {
        witness["cycle"] = cycle_to_json(g, c.charney_sultan->cycle);
        witness["join_vertices"] = labels_json(g, c.charney_sultan->join_vertices);
        witness["join"] = join_to_json(g, c.charney_sultan->join);
      }
      break;
    case CertKind::Split:
      if (c.split) {
        witness["lambda1"] = labels_json(g, c.split->lambda1);
        witness["lambda2"] = labels_json(g, c.split->lambda2);
        witness["lambda"] = labels_json(g, c.split->lambda);
        witness["condition"] = to_string(c.split->condition);
        if (c.split->condition_join) {
          witness["condition_join"] = join_to_json(g, *c.split->condition_join);
        }
      }
      break;
    case CertKind::Refuted:
      if (c.refutation) {
        witness["exhaustive"] = c.refutation->exhaustive;
        witness["subgraphs_explored"] = c.refutation->subgraphs_explored;
        witness["splits_examined"] = c.refutation->splits_examined;
      }
      break;
    default:
      break;
  }
  nlohmann::json children = nlohmann::json::array();
  for (auto const& ch : c.children) children.push_back(certificate_to_json(g, ch));
  return {{"class", to_string(c.graph_class)},
          {"kind", to_string(c.kind)},
          {"vertices", labels_json(g, c.support)},
          {"witness", witness},
          {"children", children}};
}

Certificate certificate_from_json(SimplicialGraph const& g, nlohmann::json const& j) {
  try {
    Certificate c;
    c.graph_class = graph_class_from_string(j.at("class").get<std::string>());
    c.kind = cert_kind_from_string(j.at("kind").get<std::string>());
    c.support = labels_from_json(g, j.at("vertices"));
    auto const& w = j.at("witness");
    switch (c.kind) {
      case CertKind::NontrivialJoin:
      case CertKind::Join:
        c.join = join_from_json(g, w);
        break;
      case CertKind::CharneySultan:
        c.charney_sultan = CharneySultanWitness{cycle_from_json(g, w.at("cycle")),
                                                labels_from_json(g, w.at("join_vertices")),
                                                join_from_json(g, w.at("join"))};
        break;
      case CertKind::Split: {
        SplitWitness s;
        s.lambda1 = labels_from_json(g, w.at("lambda1"));
        s.lambda2 = labels_from_json(g, w.at("lambda2"));
        s.lambda = labels_from_json(g, w.at("lambda"));
        s.condition = lambda_condition_from_string(w.at("condition").get<std::string>());
        if (w.contains("condition_join")) s.condition_join = join_from_json(g, w["condition_join"]);
        c.split = s;
        break;
      }
      case CertKind::Refuted:
        c.refutation = RefutationRecord{w.at("exhaustive").get<bool>(),
                                        w.at("subgraphs_explored").get<std::uint64_t>(),
                                        w.at("splits_examined").get<std::uint64_t>()};
        break;
      default:
        break;
    }
    for (auto const& ch : j.at("children")) c.children.push_back(certificate_from_json(g, ch));
    return c;
  } catch (nlohmann::json::exception const& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// DOT

namespace {

int emit_dot(SimplicialGraph const& g, Certificate const& c, std::ostringstream& out,
             int& next_id) {
  int id = next_id++;
  std::string label = std::string(to_string(c.kind)) + "\\n" + describe(g, c.support);
  if (c.split) {
    label += "\\n∩ " + describe(g, c.split->lambda) + " (" +
             std::string(to_string(c.split->condition)) + ")";
  }
  out << "  n" << id << " [label=\"" << label << "\"];\n";
  for (auto const& ch : c.children) {
    int cid = emit_dot(g, ch, out, next_id);
    out << "  n" << id << " -> n" << cid << ";\n";
  }
  return id;
}

}  // namespace

std::string certificate_to_dot(SimplicialGraph const& g, Certificate const& cert) {
  std::ostringstream out;
  out << "digraph derivation {\n  node [shape=box];\n";
  int next = 0;
  emit_dot(g, cert, out, next);
  out << "}\n";
  return out.str();
}

}  // namespace morsecert
