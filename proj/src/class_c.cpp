#include "morsecert/class_c.hpp"

#include <algorithm>
#include <unordered_map>

#include "morsecert/errors.hpp"

namespace morsecert {

namespace {

// Calls f(subset) for every k-subset of `pool`, in lexicographic order of
// the sorted member lists. Stops when f returns false.
template <class F>
bool for_each_k_subset(std::vector<Vertex> const& pool, int k, F&& f) {
  int n = static_cast<int>(pool.size());
  if (k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(pool[i]);
    if (!f(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::optional<JoinWitness> join_with_four_cycles(SimplicialGraph const& g, VertexSet within,
                                                 VertexSet lambda, bool proper,
                                                 std::vector<Cycle> const& fours) {
  std::optional<VertexSet> best;
  for (auto const& q : fours) {
    VertexSet u = lambda | q.support();
    if (proper && u == within) continue;
    if (best && !canonical_less(u, *best)) continue;
    if (is_nontrivial_join(g, u)) best = u;
  }
  if (!best) return std::nullopt;
  return join_split(g, *best);
}

// Shared split enumerator. `condition_for(lambda)` returns the condition
// (and join witness) or nullopt when lambda does not qualify; it is called
// only for lambdas that separate. `tick()` is called once per lambda and
// once per grouping and may throw.
template <class Condition, class Tick, class Visit>
void enumerate_splits(SimplicialGraph const& g, VertexSet within, Condition&& condition_for,
                      Tick&& tick, Visit&& visit) {
  std::vector<Vertex> pool = within.members();
  int n = static_cast<int>(pool.size());
  for (int k = 0; k <= n - 2; ++k) {
    bool go_on = for_each_k_subset(pool, k, [&](VertexSet lambda) {
      tick();
      auto comps = components(g, within - lambda);
      if (comps.size() < 2) return true;
      auto cond = condition_for(lambda);
      if (!cond) return true;
      std::size_t groupings = comps.size() - 1;
      if (groupings >= 63) {
        throw BudgetExceeded("too many components to group in a split");
      }
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << groupings); ++mask) {
        tick();
        VertexSet side2;
        for (std::size_t i = 0; i < groupings; ++i) {
          if ((mask >> i) & 1U) side2 |= comps[i + 1];
        }
        AdmissibleSplit s;
        s.lambda = lambda;
        s.lambda1 = within - side2;
        s.lambda2 = side2 | lambda;
        s.condition = cond->first;
        s.condition_join = cond->second;
        if (!visit(s)) return false;
      }
      return true;
    });
    if (!go_on) return;
  }
}

using ConditionResult = std::optional<std::pair<LambdaCondition, std::optional<JoinWitness>>>;

ConditionResult lambda_condition(SimplicialGraph const& g, VertexSet within, VertexSet lambda,
                                 std::vector<Cycle> const& fours) {
  if (lambda.empty()) return std::make_pair(LambdaCondition::Empty, std::optional<JoinWitness>{});
  if (is_clique(g, lambda)) {
    return std::make_pair(LambdaCondition::Clique, std::optional<JoinWitness>{});
  }
  if (auto w = join_with_four_cycles(g, within, lambda, false, fours)) {
    return std::make_pair(LambdaCondition::InNontrivialJoin, w);
  }
  return std::nullopt;
}

class Decider {
 public:
  Decider(SimplicialGraph const& g, GraphClass cls, DecideOptions const& opts)
      : _g(g), _cls(cls), _opts(opts) {}

  Certificate run() {
    VertexSet all = _g.vertices();
    if (member(all)) return build(all);
    Certificate c;
    c.graph_class = _cls;
    c.kind = CertKind::Refuted;
    c.support = all;
    c.refutation = RefutationRecord{true, _memo.size(), _splits_examined};
    return c;
  }

 private:
  struct Entry {
    bool member = false;
    CertKind kind = CertKind::Refuted;
    std::optional<JoinWitness> join;
    std::optional<CharneySultanWitness> charney_sultan;
    std::optional<SplitWitness> split;
  };

  bool member(VertexSet s) {
    if (auto it = _memo.find(s.bits()); it != _memo.end()) return it->second.member;
    Entry e = evaluate(s);
    bool m = e.member;
    _memo.emplace(s.bits(), std::move(e));
    return m;
  }

  bool base_case(VertexSet s, Entry& e) {
    auto hit = [&](CertKind k) {
      e.member = true;
      e.kind = k;
      return true;
    };
    if (is_edgeless(_g, s)) return hit(CertKind::Edgeless);
    if (_cls == GraphClass::C) {
      if (is_tree(_g, s)) return hit(CertKind::Tree);
      if (is_clique(_g, s)) return hit(CertKind::Clique);
      if (is_nontrivial_join(_g, s)) {
        e.join = join_split(_g, s);
        return hit(CertKind::NontrivialJoin);
      }
    } else {
      // Joins come before trees here so that a path on three vertices is
      // certified as the join it is.
      if (s.size() >= 2) {
        if (auto j = join_split(_g, s)) {
          e.join = j;
          return hit(CertKind::Join);
        }
      }
      if (is_tree(_g, s)) return hit(CertKind::Tree);
      if (is_clique(_g, s)) return hit(CertKind::Clique);
    }
    if (s.size() >= 5 && is_connected(_g, s)) {
      if (auto cs = is_charney_sultan(_g, s, _opts.cycle_budget)) {
        e.charney_sultan = std::move(cs);
        return hit(CertKind::CharneySultan);
      }
    }
    return false;
  }

  Entry evaluate(VertexSet s) {
    Entry e;
    if (base_case(s, e)) return e;
    auto fours = induced_four_cycles(_g, s);
    // Condition per lambda is shared by all of its groupings.
    std::optional<std::pair<VertexSet, ConditionResult>> last;
    enumerate_splits(
        _g, s,
        [&](VertexSet lambda) -> ConditionResult {
          if (!last || last->first != lambda) {
            last.emplace(lambda, lambda_condition(_g, s, lambda, fours));
          }
          return last->second;
        },
        [&] {
          if (++_splits_examined > _opts.split_budget) {
            throw BudgetExceeded("split search exceeded the budget of " +
                                 std::to_string(_opts.split_budget) + " candidates");
          }
        },
        [&](AdmissibleSplit const& split) {
          if (member(split.lambda1) && member(split.lambda2)) {
            e.member = true;
            e.kind = CertKind::Split;
            e.split = split;
            return false;
          }
          return true;
        });
    return e;
  }

  Certificate build(VertexSet s) {
    Entry const& e = _memo.at(s.bits());
    Certificate c;
    c.graph_class = _cls;
    c.kind = e.kind;
    c.support = s;
    c.join = e.join;
    c.charney_sultan = e.charney_sultan;
    c.split = e.split;
    if (e.split) {
      c.children.push_back(build(e.split->lambda1));
      c.children.push_back(build(e.split->lambda2));
    }
    return c;
  }

  SimplicialGraph const& _g;
  GraphClass _cls;
  DecideOptions _opts;
  std::unordered_map<std::uint64_t, Entry> _memo;
  std::uint64_t _splits_examined = 0;
};

}  // namespace

std::optional<JoinWitness> contained_in_nontrivial_join(SimplicialGraph const& g,
                                                        VertexSet lambda) {
  return contained_in_nontrivial_join(g, g.vertices(), lambda, false);
}

std::optional<JoinWitness> contained_in_nontrivial_join(SimplicialGraph const& g,
                                                        VertexSet within,
                                                        VertexSet lambda, bool proper) {
  if (!lambda.subset_of(within) || !within.subset_of(g.vertices())) {
    throw InvalidArgument("vertex set is not contained in the graph");
  }
  return join_with_four_cycles(g, within, lambda, proper, induced_four_cycles(g, within));
}

std::optional<CharneySultanWitness> is_charney_sultan(SimplicialGraph const& g,
                                                      std::uint64_t cycle_budget) {
  return is_charney_sultan(g, g.vertices(), cycle_budget);
}

std::optional<CharneySultanWitness> is_charney_sultan(SimplicialGraph const& g,
                                                      VertexSet within,
                                                      std::uint64_t cycle_budget) {
  if (!is_connected(g, within)) {
    throw InvalidArgument("Charney-Sultan graphs are connected");
  }
  if (within.size() < 5) return std::nullopt;
  auto fours = induced_four_cycles(g, within);
  if (fours.empty()) return std::nullopt;
  for (auto const& c : induced_cycles_at_least(g, within, 5, cycle_budget)) {
    VertexSet on_cycle = c.support();
    if (on_cycle == within) continue;
    // Edges off the cycle are exactly those with an endpoint off the cycle.
    VertexSet off = within - on_cycle;
    VertexSet required = off;
    for (Vertex v : off) required |= g.neighbors(v) & within;
    // The join must also hold two non-adjacent cycle vertices; otherwise the
    // cycle can meet it in a single edge and keep its circle.
    std::optional<JoinWitness> best;
    for (Vertex x : on_cycle) {
      for (Vertex y : on_cycle) {
        if (y <= x || g.adjacent(x, y)) continue;
        auto j = join_with_four_cycles(g, within, required | VertexSet::of({x, y}), true, fours);
        if (j && (!best || canonical_less(j->side_a | j->side_b, best->side_a | best->side_b))) {
          best = j;
        }
      }
    }
    if (best) return CharneySultanWitness{c, best->side_a | best->side_b, *best};
  }
  return std::nullopt;
}

void for_each_admissible_split(SimplicialGraph const& g, VertexSet within,
                               std::function<bool(AdmissibleSplit const&)> const& visit) {
  auto fours = induced_four_cycles(g, within);
  enumerate_splits(
      g, within,
      [&](VertexSet lambda) { return lambda_condition(g, within, lambda, fours); }, [] {},
      visit);
}

std::vector<AdmissibleSplit> admissible_splits(SimplicialGraph const& g) {
  if (g.size() < 2) throw InvalidArgument("admissible_splits needs at least two vertices");
  std::vector<AdmissibleSplit> out;
  for_each_admissible_split(g, g.vertices(), [&](AdmissibleSplit const& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

Certificate decide_class_c(SimplicialGraph const& g, DecideOptions const& opts) {
  return decide(g, GraphClass::C, opts);
}

Certificate decide_class_c_prime(SimplicialGraph const& g, DecideOptions const& opts) {
  return decide(g, GraphClass::CPrime, opts);
}

Certificate decide(SimplicialGraph const& g, GraphClass cls, DecideOptions const& opts) {
  return Decider(g, cls, opts).run();
}

}  // namespace morsecert
