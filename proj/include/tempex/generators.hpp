#pragma once

#include <cstdint>

#include "tempex/graph.hpp"

namespace tempex {

/// Each edge {u, v} enters layer t with probability p, drawn in (t, u, v)
/// ascending order from Rng(seed). Throws InputError unless 0 <= p <= 1.
StrictTemporalGraph random_strict_graph(Vertex n, Time lifetime, double p, std::uint64_t seed);

/// Every step splits a fresh Fisher-Yates shuffle of V at min(gamma, n) - 1
/// distinct random cut points; components are sorted. Throws InputError
/// for gamma < 1.
NonStrictTemporalGraph random_ns_graph(Vertex n, Time lifetime, std::int32_t gamma,
                                       std::uint64_t seed);

}  // namespace tempex
