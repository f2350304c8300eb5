#include "tempex/graph.hpp"

#include <algorithm>
#include <string>

namespace tempex {

namespace {

std::string edge_text(Time t, Vertex u, Vertex v) {
  return "(" + std::to_string(t) + ", " + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

StrictTemporalGraph::StrictTemporalGraph(Vertex n, Time lifetime,
                                         std::vector<std::vector<Edge>> layers)
    : n_(n), lifetime_(lifetime), layers_(std::move(layers)) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  if (lifetime < 0) throw InputError("lifetime must be non-negative");
  if (static_cast<Time>(layers_.size()) != lifetime) {
    throw InputError("layer count " + std::to_string(layers_.size()) +
                     " does not match lifetime " + std::to_string(lifetime));
  }
  offsets_.resize(layers_.size());
  adjacency_.resize(layers_.size());
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const Time t = static_cast<Time>(i + 1);
    auto& edges = layers_[i];
    for (auto& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
        throw InputError("edge endpoint out of range " + edge_text(t, e.u, e.v));
      }
      if (e.u == e.v) throw InputError("self-loop " + edge_text(t, e.u, e.v));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
      throw InputError("duplicate edge " + edge_text(t, dup->u, dup->v));
    }

    auto& off = offsets_[i];
    off.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : edges) {
      ++off[static_cast<std::size_t>(e.u) + 1];
      ++off[static_cast<std::size_t>(e.v) + 1];
    }
    for (std::size_t v = 0; v < static_cast<std::size_t>(n); ++v) off[v + 1] += off[v];
    auto& adj = adjacency_[i];
    adj.resize(edges.size() * 2);
    std::vector<std::int32_t> fill(off.begin(), off.end() - 1);
    for (const auto& e : edges) {
      adj[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.u)]++)] = e.v;
      adj[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.v)]++)] = e.u;
    }
    for (std::size_t v = 0; v < static_cast<std::size_t>(n); ++v) {
      std::sort(adj.begin() + off[v], adj.begin() + off[v + 1]);
    }
  }
}

StrictTemporalGraph StrictTemporalGraph::from_time_edges(Vertex n, Time lifetime,
                                                         const std::vector<TimeEdge>& edges) {
  if (lifetime < 0) throw InputError("lifetime must be non-negative");
  std::vector<std::vector<Edge>> layers(static_cast<std::size_t>(lifetime));
  for (const auto& te : edges) {
    if (te.time < 1 || te.time > lifetime) {
      throw InputError("timestep out of range " + edge_text(te.time, te.u, te.v));
    }
    layers[static_cast<std::size_t>(te.time - 1)].push_back({te.u, te.v});
  }
  return StrictTemporalGraph(n, lifetime, std::move(layers));
}

std::span<const Vertex> StrictTemporalGraph::neighbours(Time t, Vertex v) const {
  const auto i = static_cast<std::size_t>(t - 1);
  const auto& off = offsets_[i];
  const auto b = static_cast<std::size_t>(off[static_cast<std::size_t>(v)]);
  const auto e = static_cast<std::size_t>(off[static_cast<std::size_t>(v) + 1]);
  return std::span<const Vertex>(adjacency_[i]).subspan(b, e - b);
}

bool StrictTemporalGraph::has_edge(Time t, Vertex u, Vertex v) const {
  if (t < 1 || t > lifetime_) return false;
  if (u > v) std::swap(u, v);
  const auto edges = layer(t);
  return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

std::size_t StrictTemporalGraph::time_edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& l : layers_) total += l.size();
  return total;
}

NonStrictTemporalGraph::NonStrictTemporalGraph(Vertex n, Time lifetime, std::vector<Partition> steps)
    : n_(n), lifetime_(lifetime), steps_(std::move(steps)) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  if (lifetime < 0) throw InputError("lifetime must be non-negative");
  if (static_cast<Time>(steps_.size()) != lifetime) {
    throw InputError("step count " + std::to_string(steps_.size()) + " does not match lifetime " +
                     std::to_string(lifetime));
  }
  component_of_.assign(static_cast<std::size_t>(lifetime) * static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Time t = static_cast<Time>(i + 1);
    auto& partition = steps_[i];
    if (partition.empty() && n > 0) {
      throw InputError("step " + std::to_string(t) + " has no components");
    }
    Vertex covered = 0;
    for (std::size_t j = 0; j < partition.size(); ++j) {
      auto& comp = partition[j];
      if (comp.empty()) throw InputError("step " + std::to_string(t) + " has an empty component");
      std::sort(comp.begin(), comp.end());
      for (Vertex v : comp) {
        if (v < 0 || v >= n) {
          throw InputError("vertex " + std::to_string(v) + " out of range at step " +
                           std::to_string(t));
        }
        auto& slot = component_of_[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
        if (slot != -1) {
          throw InputError("vertex " + std::to_string(v) + " appears twice at step " +
                           std::to_string(t));
        }
        slot = static_cast<std::int32_t>(j);
        ++covered;
      }
    }
    if (covered != n) {
      throw InputError("step " + std::to_string(t) + " does not cover every vertex");
    }
    gamma_ = std::max(gamma_, static_cast<std::int32_t>(partition.size()));
  }
}

Time walk_arrival(const Walk& w) {
  return std::visit([](const auto& x) { return x.arrival; }, w);
}

bool validate_strict_walk(const StrictTemporalGraph& g, const StrictWalk& w) {
  const Vertex n = g.vertex_count();
  const Time lifetime = g.lifetime();
  if (w.start < 0 || w.start >= n) return false;
  if (w.start_time < 1) return false;
  if (w.traversals.empty()) {
    return w.start_time <= lifetime + 1 && w.arrival == w.start_time;
  }
  Vertex at = w.start;
  Time previous = w.start_time - 1;  // t0 <= t_1 < t_2 < ...
  for (const auto& tr : w.traversals) {
    if (tr.time <= previous || tr.time > lifetime) return false;
    if (tr.from != at) return false;
    if (tr.to < 0 || tr.to >= n || tr.from == tr.to) return false;
    if (!g.has_edge(tr.time, tr.from, tr.to)) return false;
    at = tr.to;
    previous = tr.time;
  }
  return w.arrival == w.traversals.back().time + 1;
}

bool validate_ns_walk(const NonStrictTemporalGraph& g, const NonStrictWalk& w) {
  if (w.start < 0 || w.start >= g.vertex_count()) return false;
  if (w.steps.empty()) return w.arrival == 1 && g.lifetime() == 0;
  for (const auto& c : w.steps) {
    if (!g.valid_ref(c)) return false;
  }
  const auto first = g.component(w.steps.front());
  if (!std::binary_search(first.begin(), first.end(), w.start)) return false;
  for (std::size_t i = 0; i + 1 < w.steps.size(); ++i) {
    const auto& a = w.steps[i];
    const auto& b = w.steps[i + 1];
    if (b.time != a.time + 1) return false;
    const auto ca = g.component(a);
    const auto cb = g.component(b);
    // Components are sorted; look for a shared vertex.
    auto ia = ca.begin();
    auto ib = cb.begin();
    bool shared = false;
    while (ia != ca.end() && ib != cb.end()) {
      if (*ia == *ib) {
        shared = true;
        break;
      }
      if (*ia < *ib) ++ia;
      else ++ib;
    }
    if (!shared) return false;
  }
  return w.arrival == w.steps.back().time;
}

VertexSet visited_vertices(const StrictTemporalGraph& g, const StrictWalk& w) {
  if (!validate_strict_walk(g, w)) throw InputError("walk does not validate");
  VertexSet out(static_cast<std::size_t>(g.vertex_count()));
  out.set(static_cast<std::size_t>(w.start));
  for (const auto& tr : w.traversals) out.set(static_cast<std::size_t>(tr.to));
  return out;
}

VertexSet visited_vertices(const NonStrictTemporalGraph& g, const NonStrictWalk& w) {
  if (!validate_ns_walk(g, w)) throw InputError("walk does not validate");
  VertexSet out(static_cast<std::size_t>(g.vertex_count()));
  out.set(static_cast<std::size_t>(w.start));
  for (const auto& c : w.steps) {
    for (Vertex v : g.component(c)) out.set(static_cast<std::size_t>(v));
  }
  return out;
}

TargetSpec TargetSpec::fixed(std::vector<Vertex> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  TargetSpec t;
  t.kind = Kind::Fixed;
  t.vertices = std::move(xs);
  return t;
}

TargetSpec TargetSpec::of_count(std::int32_t k) {
  TargetSpec t;
  t.kind = Kind::Count;
  t.count = k;
  return t;
}

TargetSpec TargetSpec::of_sets(std::vector<std::vector<Vertex>> family) {
  for (auto& s : family) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  TargetSpec t;
  t.kind = Kind::Sets;
  t.sets = std::move(family);
  return t;
}

void TargetSpec::validate(Vertex n) const {
  auto check = [n](Vertex v) {
    if (v < 0 || v >= n) throw InputError("target vertex " + std::to_string(v) + " out of range");
  };
  switch (kind) {
    case Kind::All:
      break;
    case Kind::Fixed:
      for (Vertex v : vertices) check(v);
      break;
    case Kind::Count:
      if (count < 0 || count > n) {
        throw InputError("target count " + std::to_string(count) + " outside [0, n]");
      }
      break;
    case Kind::Sets:
      for (const auto& s : sets) {
        if (s.empty()) throw InputError("empty target set");
        for (Vertex v : s) check(v);
      }
      break;
  }
}

bool TargetSpec::satisfied_by(const VertexSet& visited) const {
  switch (kind) {
    case Kind::All:
      return visited.all();
    case Kind::Fixed:
      return std::all_of(vertices.begin(), vertices.end(),
                         [&](Vertex v) { return visited.test(static_cast<std::size_t>(v)); });
    case Kind::Count:
      return static_cast<std::int64_t>(visited.count()) >= count;
    case Kind::Sets:
      return std::all_of(sets.begin(), sets.end(), [&](const std::vector<Vertex>& s) {
        return std::any_of(s.begin(), s.end(),
                           [&](Vertex v) { return visited.test(static_cast<std::size_t>(v)); });
      });
  }
  return false;
}

const char* to_string(TargetSpec::Kind k) {
  switch (k) {
    case TargetSpec::Kind::All: return "all";
    case TargetSpec::Kind::Fixed: return "fixed";
    case TargetSpec::Kind::Count: return "count";
    case TargetSpec::Kind::Sets: return "sets";
  }
  return "?";
}

VertexSet make_vertex_set(Vertex n, std::span<const Vertex> vs) {
  VertexSet out(static_cast<std::size_t>(n));
  for (Vertex v : vs) out.set(static_cast<std::size_t>(v));
  return out;
}

}  // namespace tempex
