#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tempex/graph.hpp"
#include "tempex/random.hpp"
#include "tempex/reachability.hpp"
#include "tempex/tour_dp.hpp"

namespace tempex::testing {

/// n=3, L=2, E_1 = {01}, E_2 = {12}.
StrictTemporalGraph g1();
/// g1 without its second layer.
StrictTemporalGraph g1_truncated();
/// n=4, L=2, steps [01|23], [02|13].
NonStrictTemporalGraph g2();
/// g2 plus a third step with one component.
NonStrictTemporalGraph g3();
/// n=2, L=2, both steps [0|1].
NonStrictTemporalGraph h1();

struct StrictShape {
  Vertex min_n = 1, max_n = 6;
  Time min_l = 1, max_l = 5;
};

/// n, L uniform in the shape, edge density uniform in [0.15, 0.7].
StrictTemporalGraph random_strict(Rng& rng, const StrictShape& shape);

struct NsShape {
  Vertex min_n = 1, max_n = 7;
  Time min_l = 1, max_l = 5;
  std::int32_t max_gamma = 3;
  double single_component = 0.1;  // chance that a step is one component
  double repeat = 0.15;            // chance that a step copies the previous one
};

/// Per step: repeat, single component, or a random split into 2..max_gamma parts.
NonStrictTemporalGraph random_ns(Rng& rng, const NsShape& shape);

/// Random subset of 0..n-1, each vertex with probability 1/2.
std::vector<Vertex> random_subset(Rng& rng, Vertex n);

/// One of the four target kinds, chosen uniformly.
TargetSpec random_target(Rng& rng, Vertex n);

/// Walk validates, satisfies the target, and arrives at r.arrival.
bool certificate_ok(const WalkMetricProvider& p, const TourResult& r, const TargetSpec& target);

std::string describe(const StrictTemporalGraph& g);
std::string describe(const NonStrictTemporalGraph& g);

}  // namespace tempex::testing
