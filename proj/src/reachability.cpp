#include "tempex/reachability.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tempex {

namespace {

void check_vertex_time(Vertex n, Time lifetime, Vertex u, Time t) {
  if (u < 0 || u >= n) throw InputError("vertex " + std::to_string(u) + " out of range");
  if (t < 1 || t > lifetime + 1) {
    throw InputError("start time " + std::to_string(t) + " outside [1, L+1]");
  }
}

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

ReachLabels strict_earliest_arrival(const StrictTemporalGraph& g, Vertex u, Time t) {
  const Vertex n = g.vertex_count();
  check_vertex_time(n, g.lifetime(), u, t);
  ReachLabels out;
  out.mode = Mode::Strict;
  out.source = u;
  out.start_time = t;
  out.arrival.assign(idx(n), kInfinity);
  out.pred_vertex.assign(idx(n), -1);
  out.pred_time.assign(idx(n), 0);
  out.arrival[idx(u)] = t;

  Vertex remaining = n - 1;
  for (Time step = t; step <= g.lifetime() && remaining > 0; ++step) {
    for (const Edge& e : g.layer(step)) {
      for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        const Time from = out.arrival[idx(a)];
        Time& to = out.arrival[idx(b)];
        // One traversal per step: only vertices reached before `step` may
        // move now, and everything moved now arrives at step + 1.
        if (from > step || to <= step) continue;
        if (to == kInfinity) {
          to = step + 1;
          out.pred_vertex[idx(b)] = a;
          out.pred_time[idx(b)] = step;
          --remaining;
        } else if (a < out.pred_vertex[idx(b)]) {
          out.pred_vertex[idx(b)] = a;
        }
      }
    }
  }
  return out;
}

ReachLabels ns_earliest_arrival(const NonStrictTemporalGraph& g, Vertex u, Time t) {
  const Vertex n = g.vertex_count();
  check_vertex_time(n, g.lifetime(), u, t);
  ReachLabels out;
  out.mode = Mode::NonStrict;
  out.source = u;
  out.start_time = t;
  out.arrival.assign(idx(n), kInfinity);
  out.pred_vertex.assign(idx(n), -1);
  if (t > g.lifetime()) {
    out.arrival[idx(u)] = t;
    out.pred_vertex[idx(u)] = u;
    return out;
  }

  Vertex remaining = n;
  for (Vertex w : g.component(g.component_of(t, u))) {
    out.arrival[idx(w)] = t;
    out.pred_vertex[idx(w)] = u;
    --remaining;
  }
  std::vector<Vertex> marker;
  for (Time step = t + 1; step <= g.lifetime() && remaining > 0; ++step) {
    const auto& partition = g.step(step);
    // Mark first, then absorb, so vertices absorbed at `step` never act as
    // carriers within the same step.
    marker.assign(partition.size(), -1);
    for (std::size_t j = 0; j < partition.size(); ++j) {
      for (Vertex w : partition[j]) {
        if (out.arrival[idx(w)] < step) {
          marker[j] = w;  // lowest reached id; components are sorted
          break;
        }
      }
    }
    for (std::size_t j = 0; j < partition.size(); ++j) {
      if (marker[j] < 0) continue;
      for (Vertex w : partition[j]) {
        if (out.arrival[idx(w)] == kInfinity) {
          out.arrival[idx(w)] = step;
          out.pred_vertex[idx(w)] = marker[j];
          --remaining;
        }
      }
    }
  }
  return out;
}

StrictWalk reconstruct_strict_walk(const ReachLabels& labels, Vertex v) {
  if (labels.mode != Mode::Strict) throw std::logic_error("strict labels expected");
  if (v < 0 || idx(v) >= labels.arrival.size()) throw InputError("vertex out of range");
  if (!labels.reached(v)) {
    throw UnreachableError("vertex " + std::to_string(v) + " is unreachable from " +
                           std::to_string(labels.source) + "@" +
                           std::to_string(labels.start_time));
  }
  StrictWalk w;
  w.start = labels.source;
  w.start_time = labels.start_time;
  for (Vertex at = v; at != labels.source; at = labels.pred_vertex[idx(at)]) {
    w.traversals.push_back({labels.pred_time[idx(at)], labels.pred_vertex[idx(at)], at});
  }
  std::reverse(w.traversals.begin(), w.traversals.end());
  w.arrival = labels.arrival[idx(v)];
  return w;
}

NonStrictWalk reconstruct_ns_walk(const NonStrictTemporalGraph& g, const ReachLabels& labels,
                                  Vertex v) {
  if (labels.mode != Mode::NonStrict) throw std::logic_error("non-strict labels expected");
  if (v < 0 || idx(v) >= labels.arrival.size()) throw InputError("vertex out of range");
  if (!labels.reached(v)) {
    throw UnreachableError("vertex " + std::to_string(v) + " is unreachable from " +
                           std::to_string(labels.source) + "@" +
                           std::to_string(labels.start_time));
  }
  NonStrictWalk w;
  w.start = labels.source;
  const Time end = labels.arrival[idx(v)];
  w.arrival = end;
  if (labels.start_time > g.lifetime()) return w;  // only the source, nothing to occupy

  w.steps.resize(static_cast<std::size_t>(end - labels.start_time + 1));
  Vertex at = v;
  for (Time step = end; step >= labels.start_time; --step) {
    w.steps[static_cast<std::size_t>(step - labels.start_time)] = g.component_of(step, at);
    if (step == labels.arrival[idx(at)] && step > labels.start_time) {
      at = labels.pred_vertex[idx(at)];
    }
  }
  return w;
}

void WalkMetricProvider::check_query(Vertex u, Time t) const {
  check_vertex_time(vertex_count(), lifetime(), u, t);
}

// --- strict provider -------------------------------------------------------

ReachLabels StrictProvider::labels(Vertex u, Time t) const {
  return strict_earliest_arrival(*g_, u, t);
}

Walk StrictProvider::walk(Vertex u, Vertex v, Time t) const {
  return reconstruct_strict_walk(strict_earliest_arrival(*g_, u, t), v);
}

void StrictProvider::arrivals_to(Vertex u, Time t, std::span<const Vertex> targets,
                                 std::span<Time> out, ReachScratch& s) const {
  const Vertex n = g_->vertex_count();
  if (s.arrival.size() != idx(n)) {
    s.arrival.assign(idx(n), kInfinity);
    s.is_target.assign(idx(n), 0);
  }
  std::size_t remaining = 0;
  for (Vertex x : targets) {
    s.is_target[idx(x)] = 1;
    ++remaining;
  }
  s.reached.clear();
  s.arrival[idx(u)] = t;
  s.reached.push_back(u);
  if (s.is_target[idx(u)]) --remaining;

  for (Time step = t; step <= g_->lifetime() && remaining > 0; ++step) {
    const std::size_t movers = s.reached.size();
    for (std::size_t i = 0; i < movers; ++i) {
      for (Vertex b : g_->neighbours(step, s.reached[i])) {
        if (s.arrival[idx(b)] != kInfinity) continue;
        s.arrival[idx(b)] = step + 1;
        s.reached.push_back(b);
        if (s.is_target[idx(b)]) --remaining;
      }
    }
  }
  for (std::size_t i = 0; i < targets.size(); ++i) out[i] = s.arrival[idx(targets[i])];
  for (Vertex x : targets) s.is_target[idx(x)] = 0;
  for (Vertex r : s.reached) s.arrival[idx(r)] = kInfinity;
}

bool StrictProvider::validate(const Walk& w) const {
  const auto* sw = std::get_if<StrictWalk>(&w);
  return sw != nullptr && validate_strict_walk(*g_, *sw);
}

VertexSet StrictProvider::visited(const Walk& w) const {
  return visited_vertices(*g_, std::get<StrictWalk>(w));
}

Walk StrictProvider::trivial_walk(Vertex s) const { return StrictWalk{s, 1, {}, 1}; }

void StrictProvider::append(Walk& head, const Walk& tail) const {
  auto& h = std::get<StrictWalk>(head);
  const auto& tl = std::get<StrictWalk>(tail);
  if (tl.start != h.end() || tl.start_time != h.arrival) {
    throw std::logic_error("strict walk segments do not chain");
  }
  if (tl.traversals.empty()) return;
  h.traversals.insert(h.traversals.end(), tl.traversals.begin(), tl.traversals.end());
  h.arrival = tl.arrival;
}

// --- non-strict provider ---------------------------------------------------

ReachLabels NonStrictProvider::labels(Vertex u, Time t) const {
  return ns_earliest_arrival(*g_, u, t);
}

Walk NonStrictProvider::walk(Vertex u, Vertex v, Time t) const {
  return reconstruct_ns_walk(*g_, ns_earliest_arrival(*g_, u, t), v);
}

void NonStrictProvider::arrivals_to(Vertex u, Time t, std::span<const Vertex> targets,
                                    std::span<Time> out, ReachScratch& s) const {
  const Vertex n = g_->vertex_count();
  if (s.arrival.size() != idx(n)) {
    s.arrival.assign(idx(n), kInfinity);
    s.is_target.assign(idx(n), 0);
  }
  std::size_t remaining = 0;
  for (Vertex x : targets) {
    s.is_target[idx(x)] = 1;
    ++remaining;
  }
  s.reached.clear();
  auto reach = [&](Vertex w, Time at) {
    s.arrival[idx(w)] = at;
    s.reached.push_back(w);
    if (s.is_target[idx(w)]) --remaining;
  };

  if (t > g_->lifetime()) {
    reach(u, t);
  } else {
    for (Vertex w : g_->component(g_->component_of(t, u))) reach(w, t);
  }
  for (Time step = t + 1; step <= g_->lifetime() && remaining > 0; ++step) {
    // A component is entered iff it holds a vertex reached before `step`.
    s.marked.clear();
    const std::size_t carriers = s.reached.size();
    for (std::size_t i = 0; i < carriers; ++i) {
      s.marked.push_back(g_->component_index(step, s.reached[i]));
    }
    std::sort(s.marked.begin(), s.marked.end());
    s.marked.erase(std::unique(s.marked.begin(), s.marked.end()), s.marked.end());
    for (std::int32_t j : s.marked) {
      for (Vertex w : g_->component({step, j})) {
        if (s.arrival[idx(w)] == kInfinity) reach(w, step);
      }
    }
  }
  for (std::size_t i = 0; i < targets.size(); ++i) out[i] = s.arrival[idx(targets[i])];
  for (Vertex x : targets) s.is_target[idx(x)] = 0;
  for (Vertex r : s.reached) s.arrival[idx(r)] = kInfinity;
}

bool NonStrictProvider::validate(const Walk& w) const {
  const auto* nw = std::get_if<NonStrictWalk>(&w);
  return nw != nullptr && validate_ns_walk(*g_, *nw);
}

VertexSet NonStrictProvider::visited(const Walk& w) const {
  return visited_vertices(*g_, std::get<NonStrictWalk>(w));
}

Walk NonStrictProvider::trivial_walk(Vertex s) const {
  NonStrictWalk w;
  w.start = s;
  w.arrival = 1;
  if (g_->lifetime() >= 1) w.steps.push_back(g_->component_of(1, s));
  return w;
}

void NonStrictProvider::append(Walk& head, const Walk& tail) const {
  auto& h = std::get<NonStrictWalk>(head);
  const auto& tl = std::get<NonStrictWalk>(tail);
  if (tl.steps.empty()) return;
  if (h.steps.empty() || h.steps.back() != tl.steps.front()) {
    throw std::logic_error("non-strict walk segments do not chain");
  }
  h.steps.insert(h.steps.end(), tl.steps.begin() + 1, tl.steps.end());
  h.arrival = tl.arrival;
}

}  // namespace tempex
