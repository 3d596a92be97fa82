#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "morsecert/graph.hpp"
#include "morsecert/itinerary.hpp"
#include "morsecert/words.hpp"

namespace morsecert {

inline constexpr std::size_t kMaxBallSize = 4'000'000;

/// Ball of the given radius about the identity in the Cayley graph of the
/// right-angled Coxeter group, elements indexed in BFS order (shortlex
/// order within each sphere is not guaranteed). Throws BudgetExceeded when
/// the ball would exceed kMaxBallSize elements.
class CayleyBall {
 public:
  CayleyBall(SimplicialGraph const& g, int radius);

  int radius() const { return _radius; }
  int size() const { return static_cast<int>(_elements.size()); }
  int generators() const { return _gens; }
  GroupWord const& element(int i) const { return _elements[i]; }
  int length(int i) const { return static_cast<int>(_elements[i].length()); }
  /// Index of a normal-form word, or nullopt outside the ball.
  std::optional<int> index_of(GroupWord const& normal) const;
  /// Index of element(i)·s, or -1 when it lies outside the ball.
  int neighbor(int i, Vertex s) const { return _adj[static_cast<std::size_t>(i) * _gens + s]; }

 private:
  int _radius;
  int _gens;
  std::vector<GroupWord> _elements;
  std::map<std::vector<Vertex>, int> _index;
  std::vector<int> _adj;
};

struct CutsetReport {
  WallCoset wall;
  bool separated = false;
  /// Path w1 -> w2 in the ball avoiding the wall, when not separated.
  std::optional<std::vector<GroupWord>> witness_path;
  int radius = 0;
  Itinerary itinerary1;
  Itinerary itinerary2;
};

/// Outcome counts of a sweep over all pairs of elements of a ball.
struct CutsetSweep {
  std::uint64_t pairs = 0;
  std::uint64_t equal_itineraries = 0;
  std::uint64_t no_avoiding_wall = 0;
  std::uint64_t checked = 0;
  std::uint64_t separated = 0;
  /// Element index pairs that were not separated.
  std::vector<std::pair<int, int>> failures;
  int walls = 0;
};

/// Separation checks for one split on a fixed Cayley ball. For elements
/// with different itineraries, the distinguishing wall is the first wall
/// of the first itinerary missing from the second, else the first of the
/// second missing from the first, skipping walls that contain either
/// element. The wall coset's elements are deleted from the ball and the
/// two elements are tested for lying in different components.
class CutsetChecker {
 public:
  CutsetChecker(SimplicialGraph const& g, GraphSplit split, int radius);

  CayleyBall const& ball() const { return _ball; }

  /// Throws InvalidArgument when the itineraries are equal, when radius is
  /// below max length + 2, or when every distinguishing wall contains one
  /// of the two elements.
  CutsetReport check(GroupWord const& w1, GroupWord const& w2) const;

  /// Every unordered pair of ball elements of length <= max_length; needs
  /// radius >= max_length + 2. Pairs with equal itineraries or no avoiding
  /// wall are counted and skipped. Work is grouped by wall; `parallel`
  /// spreads walls over OpenMP threads.
  CutsetSweep sweep(int max_length, bool parallel) const;

  /// Component label of every ball element after deleting the wall's
  /// elements (-1 on the wall itself).
  std::vector<int> component_labels(WallCoset const& wall) const;

 private:
  std::optional<WallCoset> choose_wall(Itinerary const& a, Itinerary const& b,
                                       GroupWord const& w1, GroupWord const& w2) const;
  std::vector<int> wall_members(WallCoset const& wall) const;

  SimplicialGraph _g;
  GraphSplit _split;
  CayleyBall _ball;
};

CutsetReport cutset_check(SimplicialGraph const& g, GroupWord const& w1, GroupWord const& w2,
                          GraphSplit const& split, int radius);

nlohmann::json cutset_to_json(SimplicialGraph const& g, CutsetReport const& r);

}  // namespace morsecert
