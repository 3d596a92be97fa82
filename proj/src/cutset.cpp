#include "morsecert/cutset.hpp"

#include <algorithm>
#include <deque>

#include "morsecert/errors.hpp"

namespace morsecert {

CayleyBall::CayleyBall(SimplicialGraph const& g, int radius)
    : _radius(radius), _gens(g.size()) {
  if (radius < 0) throw InvalidArgument("radius must be non-negative");
  _elements.push_back(GroupWord{});
  _index.emplace(std::vector<Vertex>{}, 0);
  std::size_t layer_begin = 0;
  for (int r = 0; r < radius; ++r) {
    std::size_t layer_end = _elements.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (Vertex s = 0; s < _gens; ++s) {
        GroupWord next = normal_form(g, concat(_elements[i], GroupWord{{s}}));
        if (_index.contains(next.letters)) continue;
        if (_elements.size() >= kMaxBallSize) {
          throw BudgetExceeded("Cayley ball exceeds " + std::to_string(kMaxBallSize) +
                               " elements");
        }
        _index.emplace(next.letters, static_cast<int>(_elements.size()));
        _elements.push_back(std::move(next));
      }
    }
    layer_begin = layer_end;
  }
  _adj.assign(_elements.size() * static_cast<std::size_t>(_gens), -1);
  for (std::size_t i = 0; i < _elements.size(); ++i) {
    for (Vertex s = 0; s < _gens; ++s) {
      auto j = index_of(normal_form(g, concat(_elements[i], GroupWord{{s}})));
      _adj[i * _gens + s] = j ? *j : -1;
    }
  }
}

std::optional<int> CayleyBall::index_of(GroupWord const& normal) const {
  auto it = _index.find(normal.letters);
  if (it == _index.end()) return std::nullopt;
  return it->second;
}

CutsetChecker::CutsetChecker(SimplicialGraph const& g, GraphSplit split, int radius)
    : _g(g), _split(split), _ball(g, radius) {
  validate_split(g, _split);
}

std::vector<int> CutsetChecker::wall_members(WallCoset const& wall) const {
  auto start = _ball.index_of(normal_form(_g, wall.rep));
  if (!start) throw InvalidArgument("wall representative lies outside the ball");
  std::vector<int> members{*start};
  std::vector<char> seen(_ball.size(), 0);
  seen[*start] = 1;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (Vertex s : _split.lambda) {
      int j = _ball.neighbor(members[k], s);
      if (j >= 0 && !seen[j]) {
        seen[j] = 1;
        members.push_back(j);
      }
    }
  }
  return members;
}

std::vector<int> CutsetChecker::component_labels(WallCoset const& wall) const {
  std::vector<int> label(_ball.size(), -2);
  for (int m : wall_members(wall)) label[m] = -1;
  int next = 0;
  std::vector<int> stack;
  for (int root = 0; root < _ball.size(); ++root) {
    if (label[root] != -2) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (Vertex s = 0; s < _ball.generators(); ++s) {
        int y = _ball.neighbor(x, s);
        if (y >= 0 && label[y] == -2) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

std::optional<WallCoset> CutsetChecker::choose_wall(Itinerary const& a, Itinerary const& b,
                                                    GroupWord const& w1,
                                                    GroupWord const& w2) const {
  auto occurs = [&](WallCoset const& w, Itinerary const& it) {
    return std::any_of(it.walls.begin(), it.walls.end(),
                       [&](WallCoset const& x) { return same_wall(_g, _split, w, x); });
  };
  for (auto const* pair : {&a, &b}) {
    auto const& other = pair == &a ? b : a;
    for (auto const& w : pair->walls) {
      if (occurs(w, other)) continue;
      if (wall_contains(_g, _split, w, w1) || wall_contains(_g, _split, w, w2)) continue;
      return w;
    }
  }
  return std::nullopt;
}

CutsetReport CutsetChecker::check(GroupWord const& w1, GroupWord const& w2) const {
  GroupWord n1 = normal_form(_g, w1);
  GroupWord n2 = normal_form(_g, w2);
  auto longest = static_cast<int>(std::max(n1.length(), n2.length()));
  if (_ball.radius() < longest + 2) {
    throw InvalidArgument("radius " + std::to_string(_ball.radius()) +
                          " too small: need at least " + std::to_string(longest + 2));
  }
  CutsetReport r;
  r.radius = _ball.radius();
  r.itinerary1 = itinerary(_g, n1, _split);
  r.itinerary2 = itinerary(_g, n2, _split);
  auto const& b1 = r.itinerary1.blocks;
  auto const& b2 = r.itinerary2.blocks;
  bool equal = b1.size() == b2.size() &&
               std::equal(b1.begin(), b1.end(), b2.begin(), [&](auto const& x, auto const& y) {
                 return same_block(_g, _split, x, y);
               });
  if (equal) throw InvalidArgument("itineraries are equal: no distinguishing wall");
  auto wall = choose_wall(r.itinerary1, r.itinerary2, n1, n2);
  if (!wall) throw InvalidArgument("every distinguishing wall contains one of the elements");
  r.wall = *wall;

  auto labels = component_labels(r.wall);
  int i1 = *_ball.index_of(n1);
  int i2 = *_ball.index_of(n2);
  r.separated = labels[i1] != labels[i2];
  if (!r.separated) {
    // Shortest path avoiding the wall, for the report.
    std::vector<int> parent(_ball.size(), -2);
    std::deque<int> queue{i1};
    parent[i1] = -1;
    while (!queue.empty() && parent[i2] == -2) {
      int x = queue.front();
      queue.pop_front();
      for (Vertex s = 0; s < _ball.generators(); ++s) {
        int y = _ball.neighbor(x, s);
        if (y >= 0 && labels[y] >= 0 && parent[y] == -2) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    std::vector<GroupWord> path;
    for (int x = i2; x != -1; x = parent[x]) path.push_back(_ball.element(x));
    std::reverse(path.begin(), path.end());
    r.witness_path = std::move(path);
  }
  return r;
}

CutsetSweep CutsetChecker::sweep(int max_length, bool parallel) const {
  if (_ball.radius() < max_length + 2) {
    throw InvalidArgument("sweep needs radius at least max_length + 2");
  }
  int m = 0;
  while (m < _ball.size() && _ball.length(m) <= max_length) ++m;

  // Intern walls. Minimal coset representatives are unique, so a shared
  // key means the same coset; the hit is re-confirmed by membership.
  std::map<std::vector<Vertex>, int> wall_id;
  std::vector<WallCoset> walls;
  auto intern = [&](WallCoset const& w) {
    auto [it, fresh] = wall_id.try_emplace(w.rep.letters, static_cast<int>(walls.size()));
    if (fresh) {
      walls.push_back(w);
    } else if (!same_wall(_g, _split, walls[it->second], w)) {
      throw Error("wall interning mismatch");
    }
    return it->second;
  };
  std::vector<std::vector<int>> path_walls(m);
  std::vector<int> own_wall(m);
  for (int i = 0; i < m; ++i) {
    auto const& x = _ball.element(i);
    for (auto const& w : itinerary(_g, x, _split).walls) path_walls[i].push_back(intern(w));
    own_wall[i] = intern(WallCoset{min_coset_rep(_g, x, _split.lambda)});
  }

  CutsetSweep out;
  std::vector<std::vector<std::pair<int, int>>> by_wall(walls.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      ++out.pairs;
      auto const& a = path_walls[i];
      auto const& b = path_walls[j];
      if (a == b) {
        ++out.equal_itineraries;
        continue;
      }
      int chosen = -1;
      for (auto const* p : {&a, &b}) {
        auto const& q = p == &a ? b : a;
        for (int w : *p) {
          if (std::find(q.begin(), q.end(), w) != q.end()) continue;
          if (w == own_wall[i] || w == own_wall[j]) continue;
          chosen = w;
          break;
        }
        if (chosen >= 0) break;
      }
      if (chosen < 0) {
        ++out.no_avoiding_wall;
        continue;
      }
      by_wall[chosen].emplace_back(i, j);
    }
  }

  std::vector<int> active;
  for (std::size_t w = 0; w < by_wall.size(); ++w) {
    if (!by_wall[w].empty()) active.push_back(static_cast<int>(w));
  }
  out.walls = static_cast<int>(active.size());
  std::uint64_t checked = 0, separated = 0;
  std::vector<std::pair<int, int>> failures;
  auto run_wall = [&](int w, std::uint64_t& chk, std::uint64_t& sep,
                      std::vector<std::pair<int, int>>& fail) {
    auto labels = component_labels(walls[w]);
    for (auto [i, j] : by_wall[w]) {
      ++chk;
      if (labels[i] != labels[j]) {
        ++sep;
      } else {
        fail.emplace_back(i, j);
      }
    }
  };
  if (parallel) {
#pragma omp parallel
    {
      std::uint64_t chk = 0, sep = 0;
      std::vector<std::pair<int, int>> fail;
#pragma omp for schedule(dynamic) nowait
      for (std::size_t k = 0; k < active.size(); ++k) run_wall(active[k], chk, sep, fail);
#pragma omp critical
      {
        checked += chk;
        separated += sep;
        failures.insert(failures.end(), fail.begin(), fail.end());
      }
    }
  } else {
    for (int w : active) run_wall(w, checked, separated, failures);
  }
  std::sort(failures.begin(), failures.end());
  out.checked = checked;
  out.separated = separated;
  out.failures = std::move(failures);
  return out;
}

CutsetReport cutset_check(SimplicialGraph const& g, GroupWord const& w1, GroupWord const& w2,
                          GraphSplit const& split, int radius) {
  return CutsetChecker(g, split, radius).check(w1, w2);
}

nlohmann::json cutset_to_json(SimplicialGraph const& g, CutsetReport const& r) {
  nlohmann::json out{
      {"wall", {{"rep", word_to_json(g, r.wall.rep)}}},
      {"separated", r.separated},
      {"radius", r.radius},
      {"itinerary1", itinerary_to_json(g, r.itinerary1)},
      {"itinerary2", itinerary_to_json(g, r.itinerary2)},
      {"start_block", {{"side", "1"}, {"rep", nlohmann::json::array()}}},
  };
  if (r.separated) {
    out["note"] = "separated within the ball only; not a proof for the whole group";
    out["witness_path"] = nullptr;
  } else {
    nlohmann::json path = nlohmann::json::array();
    for (auto const& w : *r.witness_path) path.push_back(word_to_json(g, w));
    out["witness_path"] = path;
  }
  return out;
}

}  // namespace morsecert
