#pragma once

#include <cstdint>
#include <vector>

#include "morsecert/certificate.hpp"
#include "morsecert/class_c.hpp"
#include "morsecert/classifier.hpp"
#include "morsecert/cycles.hpp"
#include "morsecert/graph.hpp"

namespace morsecert {

/// OpenMP counterparts of serial kernels. Each returns exactly what its
/// serial reference returns; the serial versions stay the test oracle.

/// Same result as induced_cycles_at_least, with the start vertices spread
/// over threads. The budget applies to the total count.
std::vector<Cycle> induced_cycles_at_least_parallel(SimplicialGraph const& g, VertexSet within,
                                                    int min_length,
                                                    std::uint64_t budget = kDefaultCycleBudget);

/// Classifies every graph; `parallel` runs graphs on separate threads.
/// Output order follows the input.
std::vector<BoundaryVerdict> classify_batch(std::vector<SimplicialGraph> const& graphs,
                                            GroupKind kind, DecideOptions const& opts,
                                            bool parallel);

std::vector<Certificate> decide_batch(std::vector<SimplicialGraph> const& graphs,
                                      GraphClass cls, DecideOptions const& opts, bool parallel);

int thread_count();

}  // namespace morsecert
