#pragma once

#include <cstdint>
#include <vector>

#include "tempex/graph.hpp"

namespace tempex {

/// Elements 0..n-1, sets over them, budget k. Shared shape of both source
/// problems.
struct SetSystem {
  std::int32_t n = 0;
  std::vector<std::vector<std::int32_t>> sets;
  std::int32_t k = 0;

  /// Throws InputError for empty sets, out-of-range elements or k < 0.
  void validate() const;
};

/// Is there a set of at most k elements meeting every set?
struct HittingSetInstance : SetSystem {};

/// Do at most k of the sets cover every element?
struct SetCoverInstance : SetSystem {};

struct SetTexpInstance {
  StrictTemporalGraph graph;
  Vertex start = 0;
  std::vector<std::vector<Vertex>> family;
};

struct SetNsTexpInstance {
  NonStrictTemporalGraph graph;
  Vertex start = 0;
  std::vector<std::vector<Vertex>> family;
};

/// Elements keep their ids, the start is the fresh vertex n, and each of
/// the k layers is the complete graph on all n + 1 vertices. The family is
/// the set list itself.
SetTexpInstance hitting_set_to_set_texp(const HittingSetInstance& hs);

/// Vertex layout: start 0, x_j = j for set j in 1..m, then y_{i,j} for
/// every element i of set j, in (j, i) ascending order. Odd steps hold
/// {start, x_1..x_m} and every y alone; even steps hold {x_j} plus its y's
/// for each j, then {start}. 2k steps. Family member i collects the y_{i,j}.
/// Throws InputError if an element lies in no set.
SetNsTexpInstance set_cover_to_set_ns_texp(const SetCoverInstance& sc);

/// Exact answers by subset enumeration; n <= 20 and m <= 12, else
/// CapacityError.
bool solve_hitting_set_bf(const HittingSetInstance& hs);
bool solve_set_cover_bf(const SetCoverInstance& sc);

}  // namespace tempex
