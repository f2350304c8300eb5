#include "tempex/ns_search.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

namespace tempex {

namespace {

void check_ref(const NonStrictTemporalGraph& g, ComponentRef c) {
  if (!g.valid_ref(c)) {
    throw InputError("no component " + std::to_string(c.index) + " at step " +
                     std::to_string(c.time));
  }
}

void check_start(const NonStrictTemporalGraph& g, Vertex s) {
  if (s < 0 || s >= g.vertex_count()) {
    throw InputError("start vertex " + std::to_string(s) + " out of range");
  }
}

/// Components from `from` to `to` inclusive, one per step.
std::optional<std::vector<ComponentRef>> segment(const NonStrictTemporalGraph& g,
                                                 ComponentRef from, ComponentRef to) {
  if (from.time == to.time) {
    if (from == to) return std::vector<ComponentRef>{from};
    return std::nullopt;
  }
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const auto span = static_cast<std::size_t>(to.time - from.time);
  // pred[i][c]: component at step from.time + i leading into component c
  // at step from.time + i + 1.
  std::vector<std::vector<std::int32_t>> pred(span);
  std::vector<char> reached(n, 0);
  for (Vertex v : g.component(from)) reached[static_cast<std::size_t>(v)] = 1;

  for (std::size_t i = 0; i < span; ++i) {
    const Time t = from.time + static_cast<Time>(i);
    auto& p = pred[i];
    p.assign(static_cast<std::size_t>(g.gamma(t + 1)), -1);
    for (std::size_t v = 0; v < n; ++v) {
      if (!reached[v]) continue;
      auto& slot = p[static_cast<std::size_t>(g.component_index(t + 1, static_cast<Vertex>(v)))];
      if (slot < 0) slot = g.component_index(t, static_cast<Vertex>(v));
    }
    std::fill(reached.begin(), reached.end(), 0);
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (p[c] < 0) continue;
      for (Vertex v : g.component({t + 1, static_cast<std::int32_t>(c)})) {
        reached[static_cast<std::size_t>(v)] = 1;
      }
    }
  }
  if (pred.back()[static_cast<std::size_t>(to.index)] < 0) return std::nullopt;

  std::vector<ComponentRef> out(span + 1);
  out[span] = to;
  for (std::size_t i = span; i > 0; --i) {
    out[i - 1] = {out[i].time - 1, pred[i - 1][static_cast<std::size_t>(out[i].index)]};
  }
  return out;
}

}  // namespace

bool comp_reachable(const NonStrictTemporalGraph& g, ComponentRef from, ComponentRef to) {
  check_ref(g, from);
  check_ref(g, to);
  if (from.time > to.time) throw InputError("component reachability needs t1 <= t2");
  return segment(g, from, to).has_value();
}

std::optional<NonStrictWalk> walk_between(const NonStrictTemporalGraph& g, Vertex start,
                                          ComponentRef from, ComponentRef to) {
  check_ref(g, from);
  check_ref(g, to);
  if (from.time > to.time) throw InputError("component reachability needs t1 <= t2");
  check_start(g, start);
  if (g.component_index(from.time, start) != from.index) {
    throw InputError("start vertex is not in the first component");
  }
  auto steps = segment(g, from, to);
  if (!steps) return std::nullopt;
  return NonStrictWalk{start, std::move(*steps), to.time};
}

std::optional<NonStrictWalk> walk_through(const NonStrictTemporalGraph& g, Vertex s,
                                          std::span<const ComponentRef> waypoints) {
  check_start(g, s);
  for (std::size_t i = 0; i < waypoints.size(); ++i) {
    check_ref(g, waypoints[i]);
    if (i > 0 && waypoints[i].time <= waypoints[i - 1].time) {
      throw InputError("waypoints must have strictly increasing steps");
    }
  }
  if (g.lifetime() == 0) return NonStrictWalk{s, {}, 1};

  NonStrictWalk walk{s, {g.component_of(1, s)}, 1};
  for (ComponentRef wp : waypoints) {
    auto part = segment(g, walk.steps.back(), wp);
    if (!part) return std::nullopt;
    walk.steps.insert(walk.steps.end(), part->begin() + 1, part->end());
  }
  walk.arrival = walk.steps.back().time;
  return walk;
}

std::optional<NonStrictWalk> truncate_to_target(const NonStrictTemporalGraph& g,
                                                const NonStrictWalk& w, const TargetSpec& target) {
  VertexSet seen(static_cast<std::size_t>(g.vertex_count()));
  seen.set(static_cast<std::size_t>(w.start));
  if (w.steps.empty()) {
    if (target.satisfied_by(seen)) return w;
    return std::nullopt;
  }
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    for (Vertex v : g.component(w.steps[i])) seen.set(static_cast<std::size_t>(v));
    if (target.satisfied_by(seen)) {
      NonStrictWalk cut{w.start, {w.steps.begin(), w.steps.begin() + static_cast<std::ptrdiff_t>(i + 1)},
                        w.steps[i].time};
      return cut;
    }
  }
  return std::nullopt;
}

ComponentSelection::ComponentSelection(const NonStrictTemporalGraph& g)
    : g_(&g),
      choice_(static_cast<std::size_t>(g.lifetime()), -1),
      covered_(static_cast<std::size_t>(g.vertex_count())) {}

void ComponentSelection::add(ComponentRef c) {
  check_ref(*g_, c);
  auto& slot = choice_[static_cast<std::size_t>(c.time - 1)];
  if (slot >= 0) throw InputError("step " + std::to_string(c.time) + " already has a component");
  slot = c.index;
  for (Vertex v : g_->component(c)) covered_.set(static_cast<std::size_t>(v));
  ++size_;
}

std::vector<ComponentRef> ComponentSelection::members() const {
  std::vector<ComponentRef> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < choice_.size(); ++i) {
    if (choice_[i] >= 0) out.push_back({static_cast<Time>(i + 1), choice_[i]});
  }
  return out;
}

bool w_feasible(const NonStrictTemporalGraph& g, Vertex s, const ComponentSelection& q) {
  const auto members = q.members();
  return walk_through(g, s, members).has_value();
}

namespace {

struct ChoiceHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    return boost::hash_range(v.begin(), v.end());
  }
};

/// Recursive search g(G, s, Q). Coverage is counted on `focus` (all of V
/// for exploration, X for the k-fixed variant).
class SearchTree {
 public:
  SearchTree(const NonStrictTemporalGraph& g, Vertex s, VertexSet focus, SearchStats& stats)
      : g_(g), s_(s), focus_(std::move(focus)), need_(focus_.count()), stats_(stats) {}

  std::optional<ComponentSelection> run() {
    ComponentSelection empty(g_);
    if (recurse(empty)) return accepted_;
    return std::nullopt;
  }

 private:
  struct Candidate {
    Time time;
    std::size_t gain;
    std::int32_t index;
  };

  bool recurse(const ComponentSelection& q) {
    ++stats_.calls;
    const std::size_t have = (q.covered() & focus_).count();
    if (have == need_) {
      ++stats_.feasibility_checks;
      if (!w_feasible(g_, s_, q)) return false;
      accepted_ = q;
      return true;
    }
    const Time lifetime = g_.lifetime();
    if (q.size() == static_cast<std::size_t>(lifetime)) return false;
    if (failed_.contains(q.choices())) {
      ++stats_.memo_hits;
      return false;
    }

    const auto remaining = static_cast<std::size_t>(lifetime) - q.size();
    const std::size_t missing = need_ - have;
    std::vector<Candidate> candidates;
    for (Time t = 1; t <= lifetime; ++t) {
      if (q.uses_step(t)) continue;
      for (std::int32_t j = 0; j < g_.gamma(t); ++j) {
        std::size_t gain = 0;
        for (Vertex v : g_.component({t, j})) {
          const auto bit = static_cast<std::size_t>(v);
          if (focus_.test(bit) && !q.covered().test(bit)) ++gain;
        }
        if (gain * remaining >= missing) candidates.push_back({t, gain, j});
      }
    }
    const auto count = static_cast<std::int64_t>(candidates.size());
    stats_.max_candidates = std::max(stats_.max_candidates, count);
    if (candidates.size() > remaining * remaining) {
      ++stats_.bound_violations;
      throw std::logic_error("search tree branching exceeds (L - |T(Q)|)^2");
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      if (a.time != b.time) return a.time < b.time;
      if (a.gain != b.gain) return a.gain > b.gain;
      return a.index < b.index;
    });
    for (const Candidate& c : candidates) {
      ComponentSelection next = q;
      next.add({c.time, c.index});
      if (recurse(next)) return true;
    }
    failed_.insert(q.choices());
    return false;
  }

  const NonStrictTemporalGraph& g_;
  Vertex s_;
  VertexSet focus_;
  std::size_t need_;
  SearchStats& stats_;
  std::unordered_set<std::vector<std::int32_t>, ChoiceHash> failed_;
  std::optional<ComponentSelection> accepted_;
};

TourResult run_search(const NonStrictTemporalGraph& g, Vertex s, const TargetSpec& target,
                      VertexSet focus, SearchStats* stats) {
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  TourResult result;
  if (g.lifetime() == 0) {
    VertexSet only(static_cast<std::size_t>(g.vertex_count()));
    only.set(static_cast<std::size_t>(s));
    if (!target.satisfied_by(only)) return result;
    result.yes = true;
    result.arrival = 1;
    result.walk = NonStrictWalk{s, {}, 1};
    return result;
  }
  SearchTree tree(g, s, std::move(focus), st);
  const auto accepted = tree.run();
  if (!accepted) return result;

  const auto members = accepted->members();
  const auto full = walk_through(g, s, members);
  if (!full) throw std::logic_error("accepted selection has no walk");
  auto cut = truncate_to_target(g, *full, target);
  if (!cut) throw std::logic_error("accepted selection does not cover the target");
  result.yes = true;
  result.arrival = cut->arrival;
  result.walk = std::move(*cut);
  return result;
}

}  // namespace

TourResult solve_ns_texp(const NonStrictTemporalGraph& g, Vertex s, SearchStats* stats) {
  check_start(g, s);
  VertexSet all(static_cast<std::size_t>(g.vertex_count()));
  all.set();
  return run_search(g, s, TargetSpec::all(), std::move(all), stats);
}

TourResult solve_ns_k_fixed_search(const NonStrictTemporalGraph& g, Vertex s,
                                   std::span<const Vertex> targets, SearchStats* stats) {
  check_start(g, s);
  TargetSpec spec = TargetSpec::fixed({targets.begin(), targets.end()});
  spec.validate(g.vertex_count());
  return run_search(g, s, spec, make_vertex_set(g.vertex_count(), spec.vertices), stats);
}

}  // namespace tempex
