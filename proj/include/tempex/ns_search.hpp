#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tempex/graph.hpp"
#include "tempex/tour_dp.hpp"

namespace tempex {

/// True iff some non-strict walk occupies `from` and later `to`.
/// Throws InputError for invalid refs or from.time > to.time.
bool comp_reachable(const NonStrictTemporalGraph& g, ComponentRef from, ComponentRef to);

/// A walk occupying `from` at its first step and `to` at its last, built
/// from the frontier sweep with predecessor records; nullopt if none.
std::optional<NonStrictWalk> walk_between(const NonStrictTemporalGraph& g, Vertex start,
                                          ComponentRef from, ComponentRef to);

/// A walk from (s, 1) that occupies every waypoint, ending at the last one.
/// Waypoints must have strictly increasing times. With no waypoints the
/// result is the trivial walk (or the empty walk when L = 0).
std::optional<NonStrictWalk> walk_through(const NonStrictTemporalGraph& g, Vertex s,
                                          std::span<const ComponentRef> waypoints);

/// Shortest prefix of `w` whose visit set satisfies `target`; nullopt if
/// even the whole walk does not.
std::optional<NonStrictWalk> truncate_to_target(const NonStrictTemporalGraph& g,
                                                const NonStrictWalk& w, const TargetSpec& target);

/// Components from pairwise distinct steps, with D(Q) (covered vertices)
/// and T(Q) (used steps) kept in sync.
class ComponentSelection {
 public:
  explicit ComponentSelection(const NonStrictTemporalGraph& g);

  /// Throws InputError if the ref is invalid or its step is already used.
  void add(ComponentRef c);

  /// Members ordered by step.
  std::vector<ComponentRef> members() const;
  std::size_t size() const noexcept { return size_; }
  const VertexSet& covered() const noexcept { return covered_; }
  bool uses_step(Time t) const { return choice_[static_cast<std::size_t>(t - 1)] >= 0; }
  /// Component index chosen at each step, -1 where unused.
  const std::vector<std::int32_t>& choices() const noexcept { return choice_; }

 private:
  const NonStrictTemporalGraph* g_;
  std::vector<std::int32_t> choice_;
  VertexSet covered_;
  std::size_t size_ = 0;
};

/// True iff a non-strict walk from (s, 1) visits every member of q.
bool w_feasible(const NonStrictTemporalGraph& g, Vertex s, const ComponentSelection& q);

struct SearchStats {
  std::int64_t calls = 0;
  std::int64_t feasibility_checks = 0;
  std::int64_t memo_hits = 0;
  /// Largest candidate count seen, and the bound (L - |T(Q)|)^2 at that call.
  std::int64_t max_candidates = 0;
  std::int64_t bound_violations = 0;
};

/// Exploration by the lifetime-bounded search tree over component
/// selections. Exact; the certificate comes from walk_through on the
/// accepting selection and is cut at the first step that explores V.
TourResult solve_ns_texp(const NonStrictTemporalGraph& g, Vertex s, SearchStats* stats = nullptr);

/// The same search with coverage measured on X only.
TourResult solve_ns_k_fixed_search(const NonStrictTemporalGraph& g, Vertex s,
                                   std::span<const Vertex> targets, SearchStats* stats = nullptr);

}  // namespace tempex
