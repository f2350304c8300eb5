#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tempex/reachability.hpp"

namespace tempex {

/// Outcome of any tour solver. On YES the walk validates, satisfies the
/// target and arrives exactly at `arrival`.
struct TourResult {
  bool yes = false;
  Time arrival = kInfinity;
  std::optional<Walk> walk;
  /// Targets in the order they are first reached (u_k, ..., u_1).
  std::vector<Vertex> order;
};

/// Thread count for the OpenMP kernels; 0 uses the OpenMP default.
struct SolveOptions {
  int threads = 0;
};

/// Subsets of the target list are machine words.
inline constexpr int kMaxEncodedTargets = 64;
/// Largest |X| whose 2^k * k table we are willing to allocate.
inline constexpr int kMaxTableTargets = 20;

/// F(S, v): earliest arrival of a walk from (s, 1) that visits every target
/// in S and ends at target v in S. Indexed by (bit pattern of S over the
/// positions of `targets`, position of v).
struct DpTableFixed {
  std::vector<Vertex> targets;  // ascending
  std::vector<Time> value;
  std::vector<std::uint8_t> pred;  // position of the argmin u, kNoPred for |S| = 1

  static constexpr std::uint8_t kNoPred = 0xFF;

  int size() const noexcept { return static_cast<int>(targets.size()); }
  Time at(std::uint64_t subset, int pos) const {
    return value[subset * targets.size() + static_cast<std::size_t>(pos)];
  }
  std::uint8_t pred_at(std::uint64_t subset, int pos) const {
    return pred[subset * targets.size() + static_cast<std::size_t>(pos)];
  }
};

/// Fills the k-fixed table size class by size class. For every finished
/// F(S', u) one reachability query from (u, F(S', u)) relaxes all
/// F(S' + v, v); each entry has a single writer, so subsets of one size run
/// in parallel.
DpTableFixed compute_fixed_table(const WalkMetricProvider& provider, Vertex s,
                                 std::span<const Vertex> targets, SolveOptions opts = {});

/// Serial reference: evaluates the recurrence in its pull form
/// F(S, v) = min_u F(S - v, u) + sp(u, v, F(S - v, u)), using full label
/// sweeps. Same table as compute_fixed_table, much slower.
DpTableFixed compute_fixed_table_serial(const WalkMetricProvider& provider, Vertex s,
                                        std::span<const Vertex> targets);

/// Foremost (s, 1, X)-tour, or NO. Throws CapacityError for |X| above the
/// table bound and InputError for bad ids.
TourResult solve_k_fixed(const WalkMetricProvider& provider, Vertex s,
                         std::span<const Vertex> targets, SolveOptions opts = {});
TourResult solve_k_fixed_serial(const WalkMetricProvider& provider, Vertex s,
                                std::span<const Vertex> targets);

/// Exploration schedule: solve_k_fixed with X = V. Exponential in n.
TourResult solve_texp(const WalkMetricProvider& provider, Vertex s, SolveOptions opts = {});

/// Concatenates foremost walks s -> order[0] -> order[1] -> ..., starting
/// at time 1. Shared by the subset and colour-subset tracebacks.
Walk chain_walks(const WalkMetricProvider& provider, Vertex s, std::span<const Vertex> order);

/// All bit patterns over `k` bits with exactly `size` ones, ascending.
std::vector<std::uint64_t> subsets_of_size(int k, int size);

}  // namespace tempex
