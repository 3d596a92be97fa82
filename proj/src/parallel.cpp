#include "morsecert/parallel.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

#include "morsecert/errors.hpp"

namespace morsecert {

namespace {

// Runs f(i) for i in [0, n), rethrowing the first exception (lowest index)
// after the loop.
template <typename F>
void for_each_index(std::size_t n, bool parallel, F&& f) {
  if (!parallel) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto const& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

int thread_count() { return omp_get_max_threads(); }

std::vector<Cycle> induced_cycles_at_least_parallel(SimplicialGraph const& g, VertexSet within,
                                                    int min_length, std::uint64_t budget) {
  if (min_length < 3) throw InvalidArgument("cycle length bound must be at least 3");
  auto starts = within.members();
  std::vector<std::vector<Cycle>> found(starts.size());
  std::vector<std::uint64_t> counts(starts.size(), 0);
  std::vector<char> complete(starts.size(), 1);
  for_each_index(starts.size(), true, [&](std::size_t i) {
    complete[i] = induced_cycles_from(g, within, starts[i], min_length, found[i], counts[i],
                                      budget);
  });
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    total += counts[i];
    if (!complete[i] || total > budget) {
      throw BudgetExceeded("induced cycle enumeration exceeded " + std::to_string(budget) +
                           " cycles");
    }
  }
  std::vector<Cycle> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BoundaryVerdict> classify_batch(std::vector<SimplicialGraph> const& graphs,
                                            GroupKind kind, DecideOptions const& opts,
                                            bool parallel) {
  std::vector<BoundaryVerdict> out(graphs.size());
  for_each_index(graphs.size(), parallel,
                 [&](std::size_t i) { out[i] = classify(graphs[i], kind, opts); });
  return out;
}

std::vector<Certificate> decide_batch(std::vector<SimplicialGraph> const& graphs,
                                      GraphClass cls, DecideOptions const& opts, bool parallel) {
  std::vector<Certificate> out(graphs.size());
  for_each_index(graphs.size(), parallel,
                 [&](std::size_t i) { out[i] = decide(graphs[i], cls, opts); });
  return out;
}

}  // namespace morsecert
