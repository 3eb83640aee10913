#pragma once

#include <cstdint>

#include "netid/graph.hpp"

namespace netid {

/// Deterministic connected simple graph: a seeded random spanning tree on
/// vertices v0..v{n-1}, plus each remaining pair independently with
/// probability edge_prob; lengths uniform in [min_length, max_length).
/// The result is already optimal.
MetrizedGraph generate_random_graph(int n, double edge_prob, double min_length,
                                    double max_length, std::uint64_t seed);

}  // namespace netid
