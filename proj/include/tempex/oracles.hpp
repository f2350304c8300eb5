#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tempex/graph.hpp"
#include "tempex/reachability.hpp"
#include "tempex/tour_dp.hpp"

namespace tempex {

/// Hard caps for the exhaustive solvers. Exceeding one throws BudgetError.
struct OracleBudget {
  Vertex max_vertices = 7;
  Time max_lifetime = 6;
  std::int64_t max_states = 1'000'000;

  /// Largest caps accepted anywhere.
  static constexpr Vertex kMaxVertices = 32;
  static constexpr Time kMaxLifetime = 16;
  static constexpr std::int64_t kMaxStates = 10'000'000;

  static OracleBudget maximal() { return {kMaxVertices, kMaxLifetime, kMaxStates}; }

  /// Throws InputError when a cap is negative or above the maxima.
  void check() const;

  /// Lowers max_states to the value of TEMPEX_BUDGET when that is smaller.
  /// A malformed value is an InputError.
  OracleBudget with_env_override() const;
};

/// Minimum arrival over all strict walks from (s, 1) that satisfy the
/// target: depth-first over (vertex, time, visited) with deduplication and
/// pruning at arrival >= best.
TourResult bf_strict(const StrictTemporalGraph& g, Vertex s, const TargetSpec& target,
                     const OracleBudget& budget = {});

/// Minimum arrival over all non-strict walks from (s, 1): breadth-first by
/// step over (component, visited) states; the first step with a satisfying
/// state is optimal.
TourResult bf_ns(const NonStrictTemporalGraph& g, Vertex s, const TargetSpec& target,
                 const OracleBudget& budget = {});

/// Every order of X, each chained from foremost walks; the best order wins.
/// Works for either walk model. |X| <= 8.
TourResult bf_fixed_orders(const WalkMetricProvider& provider, Vertex s,
                           std::span<const Vertex> targets);

/// Set variants: does some walk from (s, 1) hit every set?
bool bf_set_texp(const StrictTemporalGraph& g, Vertex s,
                 const std::vector<std::vector<Vertex>>& family, const OracleBudget& budget = {});
bool bf_set_ns_texp(const NonStrictTemporalGraph& g, Vertex s,
                    const std::vector<std::vector<Vertex>>& family,
                    const OracleBudget& budget = {});

}  // namespace tempex
