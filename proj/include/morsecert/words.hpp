#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "morsecert/graph.hpp"

namespace morsecert {

/// Word over the generators of the right-angled Coxeter group of a graph;
/// letters are vertex indices. Every generator is an involution and two
/// generators commute exactly when they are adjacent.
struct GroupWord {
  std::vector<Vertex> letters;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  auto operator<=>(GroupWord const&) const = default;
};

/// Reads a word. Whitespace-separated tokens are labels; a single token
/// that is not a label is split into characters when every label is one
/// character long ("aba"). "e", "1" and the empty string are the identity.
/// Throws ParseError for unknown generators.
GroupWord parse_word(SimplicialGraph const& g, std::string_view text);
std::string word_to_string(SimplicialGraph const& g, GroupWord const& w);
nlohmann::json word_to_json(SimplicialGraph const& g, GroupWord const& w);

GroupWord inverse(GroupWord w);
GroupWord concat(GroupWord const& a, GroupWord const& b);
VertexSet letters_of(GroupWord const& w);

/// A reduced word for the same element: cancels each letter against an
/// earlier equal letter when everything between commutes with it.
GroupWord reduce(SimplicialGraph const& g, GroupWord const& w);

/// Shortlex-least word for the same element (letters ordered by vertex
/// index). Throws InvalidArgument for letters outside the graph.
GroupWord normal_form(SimplicialGraph const& g, GroupWord const& w);

/// Whether the element lies in the special subgroup generated by `s`.
/// All reduced words of an element use the same letters.
bool subgroup_membership(SimplicialGraph const& g, GroupWord const& w, VertexSet s);

/// Shortlex-least representative of the left coset w·W_s: strips every
/// letter of `s` that can be moved to the end of a reduced word.
GroupWord min_coset_rep(SimplicialGraph const& g, GroupWord const& w, VertexSet s);

/// Whether a·W_s = b·W_s, decided by membership of a^-1 b in W_s.
bool same_coset(SimplicialGraph const& g, GroupWord const& a, GroupWord const& b, VertexSet s);

}  // namespace morsecert
