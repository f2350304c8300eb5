#pragma once

#include <memory>
#include <span>
#include <vector>

#include "tempex/graph.hpp"

namespace tempex {

/// Earliest-arrival labels from one (source, start time) pair.
///
/// Strict mode: arrival[v] is the step after the last traversal of a
/// foremost walk to v, and the predecessor record is (pred_time[v],
/// pred_vertex[v]) for the final traversal. Non-strict mode: arrival[v] is
/// the first step whose occupied component contains v; pred_vertex[v] is the
/// label p(v) of the forward sweep. Unreached vertices hold kInfinity.
struct ReachLabels {
  Mode mode = Mode::Strict;
  Vertex source = 0;
  Time start_time = 1;
  std::vector<Time> arrival;
  std::vector<Vertex> pred_vertex;
  std::vector<Time> pred_time;  // strict only

  /// Duration of a foremost walk to v, or kInfinity.
  Time sp(Vertex v) const {
    const Time a = arrival[static_cast<std::size_t>(v)];
    return is_finite(a) ? a - start_time : kInfinity;
  }
  bool reached(Vertex v) const { return is_finite(arrival[static_cast<std::size_t>(v)]); }
};

/// Single forward scan over layers t..L. Valid for 1 <= t <= L+1.
ReachLabels strict_earliest_arrival(const StrictTemporalGraph& g, Vertex u, Time t);

/// Forward component sweep. Valid for 1 <= t <= L+1 (t = L+1 reaches only u).
ReachLabels ns_earliest_arrival(const NonStrictTemporalGraph& g, Vertex u, Time t);

/// Foremost walk to v. Throws UnreachableError if v was not reached.
StrictWalk reconstruct_strict_walk(const ReachLabels& labels, Vertex v);
NonStrictWalk reconstruct_ns_walk(const NonStrictTemporalGraph& g, const ReachLabels& labels,
                                  Vertex v);

/// Reusable buffers for WalkMetricProvider::arrivals_to; one per thread.
struct ReachScratch {
  std::vector<Time> arrival;
  std::vector<Vertex> reached;
  std::vector<char> is_target;
  std::vector<Vertex> marked;
};

/// Earliest-arrival oracle over one graph, in either walk model.
///
/// The DP solvers only talk to this interface, so the same recurrences run
/// for strict and non-strict graphs. Implementations are read-only after
/// construction and may be queried concurrently (with per-thread scratch).
class WalkMetricProvider {
 public:
  virtual ~WalkMetricProvider() = default;

  virtual Mode mode() const noexcept = 0;
  virtual Vertex vertex_count() const noexcept = 0;
  virtual Time lifetime() const noexcept = 0;

  virtual ReachLabels labels(Vertex u, Time t) const = 0;

  /// Foremost walk from (u, t) to v; throws UnreachableError when none exists.
  virtual Walk walk(Vertex u, Vertex v, Time t) const = 0;

  /// out[i] = earliest arrival at targets[i] from (u, t). Targets must be
  /// distinct. Stops scanning once every target is reached.
  virtual void arrivals_to(Vertex u, Time t, std::span<const Vertex> targets, std::span<Time> out,
                           ReachScratch& scratch) const = 0;

  virtual bool validate(const Walk& w) const = 0;
  virtual VertexSet visited(const Walk& w) const = 0;

  /// The walk that stays at s from time 1.
  virtual Walk trivial_walk(Vertex s) const = 0;

  /// Appends `tail`, which must start where and when `head` arrives.
  virtual void append(Walk& head, const Walk& tail) const = 0;

 protected:
  void check_query(Vertex u, Time t) const;
};

class StrictProvider final : public WalkMetricProvider {
 public:
  explicit StrictProvider(const StrictTemporalGraph& g) : g_(&g) {}

  Mode mode() const noexcept override { return Mode::Strict; }
  Vertex vertex_count() const noexcept override { return g_->vertex_count(); }
  Time lifetime() const noexcept override { return g_->lifetime(); }
  const StrictTemporalGraph& graph() const noexcept { return *g_; }

  ReachLabels labels(Vertex u, Time t) const override;
  Walk walk(Vertex u, Vertex v, Time t) const override;
  void arrivals_to(Vertex u, Time t, std::span<const Vertex> targets, std::span<Time> out,
                   ReachScratch& scratch) const override;
  bool validate(const Walk& w) const override;
  VertexSet visited(const Walk& w) const override;
  Walk trivial_walk(Vertex s) const override;
  void append(Walk& head, const Walk& tail) const override;

 private:
  const StrictTemporalGraph* g_;
};

class NonStrictProvider final : public WalkMetricProvider {
 public:
  explicit NonStrictProvider(const NonStrictTemporalGraph& g) : g_(&g) {}

  Mode mode() const noexcept override { return Mode::NonStrict; }
  Vertex vertex_count() const noexcept override { return g_->vertex_count(); }
  Time lifetime() const noexcept override { return g_->lifetime(); }
  const NonStrictTemporalGraph& graph() const noexcept { return *g_; }

  ReachLabels labels(Vertex u, Time t) const override;
  Walk walk(Vertex u, Vertex v, Time t) const override;
  void arrivals_to(Vertex u, Time t, std::span<const Vertex> targets, std::span<Time> out,
                   ReachScratch& scratch) const override;
  bool validate(const Walk& w) const override;
  VertexSet visited(const Walk& w) const override;
  Walk trivial_walk(Vertex s) const override;
  void append(Walk& head, const Walk& tail) const override;

 private:
  const NonStrictTemporalGraph* g_;
};

}  // namespace tempex
