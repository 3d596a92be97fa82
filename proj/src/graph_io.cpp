#include "morsecert/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "morsecert/errors.hpp"

namespace morsecert {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Builder {
  std::vector<std::string> declared;
  bool have_declared = false;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::size_t> edge_lines;
  std::vector<std::string> warnings;

  void add_edge(std::string u, std::string v, std::size_t line) {
    if (u == v) throw ParseError("self-loop at vertex '" + u + "'", line);
    edges.emplace_back(std::move(u), std::move(v));
    edge_lines.push_back(line);
  }

  SimplicialGraph build() {
    std::set<std::string> vs;
    if (have_declared) {
      for (auto const& l : declared) {
        if (!vs.insert(l).second) {
          warnings.push_back("vertex '" + l + "' declared twice");
        }
      }
    }
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<std::pair<std::string, std::string>> unique;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      for (auto const* end : {&u, &v}) {
        if (!vs.contains(*end)) {
          if (have_declared) {
            throw ParseError("edge references undeclared vertex '" + *end + "'",
                             edge_lines[i]);
          }
          vs.insert(*end);
        }
      }
      auto key = std::minmax(u, v);
      if (!seen.insert(key).second) {
        warnings.push_back("duplicate edge " + key.first + " " + key.second +
                           (edge_lines[i] ? " at line " + std::to_string(edge_lines[i])
                                          : std::string()) +
                           " ignored");
        continue;
      }
      unique.emplace_back(u, v);
    }
    if (vs.size() > static_cast<std::size_t>(kMaxVertices)) {
      throw ParseError("graphs are limited to " + std::to_string(kMaxVertices) +
                       " vertices");
    }
    return SimplicialGraph(std::vector<std::string>(vs.begin(), vs.end()), unique);
  }
};

ParsedGraph parse_text(std::string_view text) {
  Builder b;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    auto sp = line.find_first_of(" \t");
    std::string_view keyword = line.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view{}
                                                         : line.substr(sp + 1);
    if (keyword == "vertices") {
      b.have_declared = true;
      for (auto& l : split_ws(rest)) b.declared.push_back(std::move(l));
    } else if (keyword == "edges") {
      std::size_t start = 0;
      while (start <= rest.size()) {
        auto comma = rest.find(',', start);
        std::string_view item = rest.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        start = comma == std::string_view::npos ? rest.size() + 1 : comma + 1;
        auto toks = split_ws(item);
        if (toks.empty()) {
          if (comma == std::string_view::npos) break;
          throw ParseError("empty edge between commas", line_no);
        }
        if (toks.size() != 2) {
          throw ParseError("an edge needs exactly two endpoints, got '" +
                               std::string(trim(item)) + "'",
                           line_no);
        }
        b.add_edge(toks[0], toks[1], line_no);
      }
    } else {
      throw ParseError("expected 'vertices' or 'edges', got '" + std::string(keyword) + "'",
                       line_no);
    }
  }
  SimplicialGraph g = b.build();
  return {std::move(g), std::move(b.warnings)};
}

ParsedGraph parse_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("graph JSON must be an object");
  Builder b;
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw ParseError("'vertices' must be an array");
    b.have_declared = true;
    for (auto const& v : j["vertices"]) {
      if (!v.is_string()) throw ParseError("vertex labels must be strings");
      b.declared.push_back(v.get<std::string>());
    }
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError("'edges' must be an array");
    for (auto const& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw ParseError("each edge must be a pair of strings");
      }
      b.add_edge(e[0].get<std::string>(), e[1].get<std::string>(), 0);
    }
  }
  SimplicialGraph g = b.build();
  return {std::move(g), std::move(b.warnings)};
}

}  // namespace

ParsedGraph parse_graph_with_warnings(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json_text(text);
  return parse_text(text);
}

SimplicialGraph parse_graph(std::string_view text) {
  return parse_graph_with_warnings(text).graph;
}

SimplicialGraph read_graph_file(std::string const& path,
                                std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  auto parsed = parse_graph_with_warnings(ss.str());
  if (warnings != nullptr) *warnings = std::move(parsed.warnings);
  return std::move(parsed.graph);
}

nlohmann::json graph_to_json(SimplicialGraph const& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  return {{"vertices", g.labels()}, {"edges", edges}};
}

SimplicialGraph graph_from_json(nlohmann::json const& j) {
  return parse_graph(j.dump());
}

std::string graph_to_text(SimplicialGraph const& g) {
  std::string out = "vertices";
  for (auto const& l : g.labels()) out += " " + l;
  out += "\nedges";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    out += first ? " " : ", ";
    out += g.label(u) + " " + g.label(v);
    first = false;
  }
  out += "\n";
  return out;
}

std::string graph_to_dot(SimplicialGraph const& g, std::string const& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (auto const& l : g.labels()) out << "  \"" << l << "\";\n";
  for (auto [u, v] : g.edges()) {
    out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json labels_json(SimplicialGraph const& g, VertexSet s) {
  return g.labels_of(s);
}

VertexSet labels_from_json(SimplicialGraph const& g, nlohmann::json const& j) {
  if (!j.is_array()) throw ParseError("expected an array of vertex labels");
  VertexSet s;
  for (auto const& l : j) {
    if (!l.is_string()) throw ParseError("vertex labels must be strings");
    auto v = g.find(l.get<std::string>());
    if (!v) throw ParseError("unknown vertex '" + l.get<std::string>() + "'");
    s.insert(*v);
  }
  return s;
}

}  // namespace morsecert
