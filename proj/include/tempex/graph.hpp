#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "tempex/types.hpp"

namespace tempex {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct TimeEdge {
  Time time = 0;
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const TimeEdge&, const TimeEdge&) = default;
};

/// Layered undirected simple graphs E_1..E_L over vertices 0..n-1.
///
/// Immutable after construction. Each layer keeps its edges sorted with
/// u < v and a CSR adjacency for the reachability sweeps.
class StrictTemporalGraph {
 public:
  StrictTemporalGraph() = default;

  /// Layer t of `layers` (0-based index t-1) holds E_t. Throws InputError on
  /// self-loops, out-of-range endpoints or duplicate edges within a layer.
  StrictTemporalGraph(Vertex n, Time lifetime, std::vector<std::vector<Edge>> layers);

  static StrictTemporalGraph from_time_edges(Vertex n, Time lifetime,
                                             const std::vector<TimeEdge>& edges);

  Vertex vertex_count() const noexcept { return n_; }
  Time lifetime() const noexcept { return lifetime_; }

  /// Edges of layer t (1-based), sorted, u < v.
  std::span<const Edge> layer(Time t) const { return layers_[static_cast<std::size_t>(t - 1)]; }

  /// Neighbours of v in layer t, ascending.
  std::span<const Vertex> neighbours(Time t, Vertex v) const;

  bool has_edge(Time t, Vertex u, Vertex v) const;
  std::size_t time_edge_count() const noexcept;

 private:
  Vertex n_ = 0;
  Time lifetime_ = 0;
  std::vector<std::vector<Edge>> layers_;
  std::vector<std::vector<std::int32_t>> offsets_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// One component of one step; components at different steps are distinct.
struct ComponentRef {
  Time time = 0;
  std::int32_t index = 0;
  friend auto operator<=>(const ComponentRef&, const ComponentRef&) = default;
};

using Partition = std::vector<std::vector<Vertex>>;

/// A sequence of L partitions of 0..n-1; step t lists its components.
class NonStrictTemporalGraph {
 public:
  NonStrictTemporalGraph() = default;

  /// Vertices inside each component are sorted; component order is kept.
  /// Throws InputError unless every step is a partition of 0..n-1 into
  /// non-empty parts.
  NonStrictTemporalGraph(Vertex n, Time lifetime, std::vector<Partition> steps);

  Vertex vertex_count() const noexcept { return n_; }
  Time lifetime() const noexcept { return lifetime_; }

  const Partition& step(Time t) const { return steps_[static_cast<std::size_t>(t - 1)]; }
  std::int32_t gamma(Time t) const { return static_cast<std::int32_t>(step(t).size()); }
  std::int32_t gamma() const noexcept { return gamma_; }

  std::span<const Vertex> component(ComponentRef c) const {
    return step(c.time)[static_cast<std::size_t>(c.index)];
  }
  std::int32_t component_index(Time t, Vertex v) const {
    return component_of_[static_cast<std::size_t>(t - 1) * static_cast<std::size_t>(n_) +
                         static_cast<std::size_t>(v)];
  }
  ComponentRef component_of(Time t, Vertex v) const { return {t, component_index(t, v)}; }
  bool valid_ref(ComponentRef c) const noexcept {
    return c.time >= 1 && c.time <= lifetime_ && c.index >= 0 && c.index < gamma(c.time);
  }

 private:
  Vertex n_ = 0;
  Time lifetime_ = 0;
  std::int32_t gamma_ = 0;
  std::vector<Partition> steps_;
  std::vector<std::int32_t> component_of_;
};

struct Traversal {
  Time time = 0;
  Vertex from = 0;
  Vertex to = 0;
  friend bool operator==(const Traversal&, const Traversal&) = default;
};

/// Start vertex and time, then edge traversals at strictly increasing
/// steps. Arrival is the last traversal step + 1, or the start time when
/// the walk only waits.
struct StrictWalk {
  Vertex start = 0;
  Time start_time = 1;
  std::vector<Traversal> traversals;
  Time arrival = 1;

  Vertex end() const noexcept { return traversals.empty() ? start : traversals.back().to; }
  friend bool operator==(const StrictWalk&, const StrictWalk&) = default;
};

/// One component per consecutive step; arrival is the last occupied step.
///
/// The empty walk (no steps) stands at `start` at time 1 and visits only
/// `start`; it only arises on graphs with lifetime 0.
struct NonStrictWalk {
  Vertex start = 0;
  std::vector<ComponentRef> steps;
  Time arrival = 1;
  friend bool operator==(const NonStrictWalk&, const NonStrictWalk&) = default;
};

using Walk = std::variant<StrictWalk, NonStrictWalk>;

/// Arrival recorded in a walk of either kind.
Time walk_arrival(const Walk& w);

bool validate_strict_walk(const StrictTemporalGraph& g, const StrictWalk& w);
bool validate_ns_walk(const NonStrictTemporalGraph& g, const NonStrictWalk& w);

/// Vertices of the walk including the start. Throws InputError if the walk
/// does not validate.
VertexSet visited_vertices(const StrictTemporalGraph& g, const StrictWalk& w);
/// Union of occupied components (or {start} for the empty walk).
VertexSet visited_vertices(const NonStrictTemporalGraph& g, const NonStrictWalk& w);

/// What a tour has to visit.
struct TargetSpec {
  enum class Kind { All, Fixed, Count, Sets };

  Kind kind = Kind::All;
  std::vector<Vertex> vertices;            // Fixed
  std::int32_t count = 0;                  // Count
  std::vector<std::vector<Vertex>> sets;   // Sets

  static TargetSpec all() { return {}; }
  static TargetSpec fixed(std::vector<Vertex> xs);
  static TargetSpec of_count(std::int32_t k);
  static TargetSpec of_sets(std::vector<std::vector<Vertex>> family);

  /// Throws InputError if an id is >= n, k is outside [0, n], or a set is empty.
  void validate(Vertex n) const;

  bool satisfied_by(const VertexSet& visited) const;
};

const char* to_string(TargetSpec::Kind k);

/// Bitset over n vertices holding `vs`.
VertexSet make_vertex_set(Vertex n, std::span<const Vertex> vs);

}  // namespace tempex
