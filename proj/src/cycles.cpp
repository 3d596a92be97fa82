#include "morsecert/cycles.hpp"

#include <algorithm>

#include "morsecert/errors.hpp"

namespace morsecert {

namespace {

// Grows induced paths start = p0, p1, ..., pk over vertices larger than
// start. Each cycle is found twice (once per direction); only the
// direction with p1 < pk is kept.
struct PathSearch {
  SimplicialGraph const& g;
  VertexSet allowed;  // vertices > start inside `within`
  Vertex start;
  int min_length;
  std::vector<Cycle>& out;
  std::uint64_t& counter;
  std::uint64_t budget;
  std::vector<Vertex> path;
  VertexSet interior;  // p1 .. p(k-1), which a new vertex must avoid

  bool extend() {
    Vertex last = path.back();
    for (Vertex x : g.neighbors(last) & allowed) {
      if (std::find(path.begin(), path.end(), x) != path.end()) continue;
      if (g.neighbors(x).intersects(interior)) continue;
      if (path.size() >= 2 && g.adjacent(x, start)) {
        // Closing vertex: path + x is a chordless cycle when the path has
        // at least one edge beyond the start.
        if (path[1] < x) {
          if (++counter > budget) return false;
          if (static_cast<int>(path.size()) + 1 >= min_length) {
            std::vector<Vertex> vs = path;
            vs.push_back(x);
            out.push_back(Cycle{std::move(vs)});
          }
        }
        continue;
      }
      bool grow_interior = path.size() >= 2;
      if (grow_interior) interior.insert(last);
      path.push_back(x);
      bool ok = extend();
      path.pop_back();
      if (grow_interior) interior.erase(last);
      if (!ok) return false;
    }
    return true;
  }
};

}  // namespace

bool induced_cycles_from(SimplicialGraph const& g, VertexSet within, Vertex start,
                         int min_length, std::vector<Cycle>& out,
                         std::uint64_t& counter, std::uint64_t budget) {
  VertexSet larger(start + 1 >= 64 ? 0 : (~std::uint64_t{0} << (start + 1)));
  PathSearch search{g, within & larger, start, min_length, out, counter, budget, {start}, {}};
  return search.extend();
}

std::vector<Cycle> induced_cycles_at_least(SimplicialGraph const& g, int min_length,
                                           std::uint64_t budget) {
  return induced_cycles_at_least(g, g.vertices(), min_length, budget);
}

std::vector<Cycle> induced_cycles_at_least(SimplicialGraph const& g, VertexSet within,
                                           int min_length, std::uint64_t budget) {
  if (min_length < 3) throw InvalidArgument("cycle length bound must be at least 3");
  std::vector<Cycle> out;
  std::uint64_t counter = 0;
  for (Vertex s : within) {
    if (!induced_cycles_from(g, within, s, min_length, out, counter, budget)) {
      throw BudgetExceeded("induced cycle enumeration exceeded " +
                           std::to_string(budget) + " cycles");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cycle> induced_four_cycles(SimplicialGraph const& g, VertexSet within) {
  // A 4-cycle a-x-b-y is two non-adjacent pairs {a,b}, {x,y} with every
  // cross pair adjacent.
  std::vector<Cycle> out;
  for (Vertex a : within) {
    for (Vertex b : within) {
      if (b <= a || g.adjacent(a, b)) continue;
      VertexSet common = g.neighbors(a) & g.neighbors(b) & within;
      for (Vertex x : common) {
        if (x <= a) continue;
        for (Vertex y : common) {
          if (y <= x || g.adjacent(x, y)) continue;
          // a is the smallest vertex, so {a, b} is the diagonal through it.
          out.push_back(canonical_cycle({a, x, b, y}));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace morsecert
