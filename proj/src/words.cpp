#include "morsecert/words.hpp"

#include <algorithm>
#include <sstream>

#include "morsecert/errors.hpp"

namespace morsecert {

namespace {

bool commute(SimplicialGraph const& g, Vertex a, Vertex b) {
  return a == b || g.adjacent(a, b);
}

void check_letters(SimplicialGraph const& g, GroupWord const& w) {
  for (Vertex v : w.letters) {
    if (v < 0 || v >= g.size()) throw InvalidArgument("unknown generator in word");
  }
}

}  // namespace

GroupWord parse_word(SimplicialGraph const& g, std::string_view text) {
  std::vector<std::string> toks;
  std::istringstream in{std::string(text)};
  std::string t;
  while (in >> t) toks.push_back(t);
  GroupWord w;
  if (toks.empty()) return w;
  if (toks.size() == 1 && (toks[0] == "e" || toks[0] == "1") && !g.find(toks[0])) return w;
  bool single_chars = std::all_of(g.labels().begin(), g.labels().end(),
                                  [](auto const& l) { return l.size() == 1; });
  for (auto const& tok : toks) {
    if (auto v = g.find(tok)) {
      w.letters.push_back(*v);
      continue;
    }
    if (!single_chars) throw ParseError("unknown generator '" + tok + "'");
    for (char c : tok) {
      auto v = g.find(std::string_view(&c, 1));
      if (!v) throw ParseError("unknown generator '" + std::string(1, c) + "'");
      w.letters.push_back(*v);
    }
  }
  return w;
}

std::string word_to_string(SimplicialGraph const& g, GroupWord const& w) {
  std::string out;
  for (Vertex v : w.letters) {
    if (!out.empty()) out += ' ';
    out += g.label(v);
  }
  return out;
}

nlohmann::json word_to_json(SimplicialGraph const& g, GroupWord const& w) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : w.letters) out.push_back(g.label(v));
  return out;
}

GroupWord inverse(GroupWord w) {
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

GroupWord concat(GroupWord const& a, GroupWord const& b) {
  GroupWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

VertexSet letters_of(GroupWord const& w) {
  VertexSet s;
  for (Vertex v : w.letters) s.insert(v);
  return s;
}

GroupWord reduce(SimplicialGraph const& g, GroupWord const& w) {
  check_letters(g, w);
  GroupWord r;
  for (Vertex s : w.letters) {
    bool cancelled = false;
    for (std::size_t j = r.letters.size(); j-- > 0;) {
      Vertex x = r.letters[j];
      if (x == s) {
        r.letters.erase(r.letters.begin() + static_cast<std::ptrdiff_t>(j));
        cancelled = true;
        break;
      }
      if (!commute(g, x, s)) break;
    }
    if (!cancelled) r.letters.push_back(s);
  }
  return r;
}

GroupWord normal_form(SimplicialGraph const& g, GroupWord const& w) {
  GroupWord r = reduce(g, w);
  // Among the reduced words of an element (all related by swapping adjacent
  // commuting letters), pick the lexicographically least: repeatedly emit
  // the smallest letter that commutes with every letter still before it.
  std::vector<Vertex> rest = std::move(r.letters);
  GroupWord out;
  out.letters.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (best != rest.size() && rest[i] >= rest[best]) continue;
      bool free = true;
      for (std::size_t j = 0; j < i && free; ++j) free = commute(g, rest[j], rest[i]);
      if (free) best = i;
    }
    out.letters.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

bool subgroup_membership(SimplicialGraph const& g, GroupWord const& w, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw InvalidArgument("generator set outside the graph");
  return letters_of(reduce(g, w)).subset_of(s);
}

GroupWord min_coset_rep(SimplicialGraph const& g, GroupWord const& w, VertexSet s) {
  GroupWord r = reduce(g, w);
  // A letter can be moved to the end iff it commutes with every later
  // letter. Remove such letters from `s` until none is left.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = r.letters.size(); i-- > 0;) {
      Vertex x = r.letters[i];
      if (!s.contains(x)) continue;
      bool last = true;
      for (std::size_t j = i + 1; j < r.letters.size(); ++j) {
        if (!commute(g, x, r.letters[j])) {
          last = false;
          break;
        }
      }
      if (last) {
        r.letters.erase(r.letters.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
      }
    }
  }
  return normal_form(g, r);
}

bool same_coset(SimplicialGraph const& g, GroupWord const& a, GroupWord const& b, VertexSet s) {
  return subgroup_membership(g, concat(inverse(a), b), s);
}

}  // namespace morsecert
