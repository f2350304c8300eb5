#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tempex/io.hpp"

namespace tempex::testing {

StrictTemporalGraph g1() { return StrictTemporalGraph(3, 2, {{{0, 1}}, {{1, 2}}}); }

StrictTemporalGraph g1_truncated() { return StrictTemporalGraph(3, 1, {{{0, 1}}}); }

NonStrictTemporalGraph g2() {
  return NonStrictTemporalGraph(4, 2, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}});
}

NonStrictTemporalGraph g3() {
  return NonStrictTemporalGraph(4, 3, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 1, 2, 3}}});
}

NonStrictTemporalGraph h1() { return NonStrictTemporalGraph(2, 2, {{{0}, {1}}, {{0}, {1}}}); }

namespace {

std::int64_t uniform_in(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Partition random_split(Rng& rng, Vertex n, std::int32_t parts) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
  // Every part gets one vertex, the rest land in random parts.
  Partition part(static_cast<std::size_t>(parts));
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t j = i < part.size() ? i : uniform_below(rng, part.size());
    part[j].push_back(order[i]);
  }
  for (auto& c : part) std::sort(c.begin(), c.end());
  return part;
}

}  // namespace

StrictTemporalGraph random_strict(Rng& rng, const StrictShape& shape) {
  const auto n = static_cast<Vertex>(uniform_in(rng, shape.min_n, shape.max_n));
  const auto lifetime = static_cast<Time>(uniform_in(rng, shape.min_l, shape.max_l));
  const double p = 0.15 + 0.55 * unit(rng);
  std::vector<std::vector<Edge>> layers(static_cast<std::size_t>(lifetime));
  for (auto& layer : layers) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (bernoulli(rng, p)) layer.push_back({u, v});
      }
    }
  }
  return StrictTemporalGraph(n, lifetime, std::move(layers));
}

NonStrictTemporalGraph random_ns(Rng& rng, const NsShape& shape) {
  const auto n = static_cast<Vertex>(uniform_in(rng, shape.min_n, shape.max_n));
  const auto lifetime = static_cast<Time>(uniform_in(rng, shape.min_l, shape.max_l));
  std::vector<Partition> steps;
  for (Time t = 1; t <= lifetime; ++t) {
    const double roll = unit(rng);
    if (!steps.empty() && roll < shape.repeat) {
      steps.push_back(steps.back());
    } else if (n == 1 || shape.max_gamma == 1 || roll < shape.repeat + shape.single_component) {
      std::vector<Vertex> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 0);
      steps.push_back({all});
    } else {
      const auto top = std::min<std::int32_t>(shape.max_gamma, n);
      steps.push_back(random_split(rng, n, static_cast<std::int32_t>(uniform_in(rng, 2, top))));
    }
  }
  return NonStrictTemporalGraph(n, lifetime, std::move(steps));
}

std::vector<Vertex> random_subset(Rng& rng, Vertex n) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (rng() & 1U) out.push_back(v);
  }
  return out;
}

TargetSpec random_target(Rng& rng, Vertex n) {
  switch (uniform_below(rng, 4)) {
    case 0:
      return TargetSpec::all();
    case 1:
      return TargetSpec::fixed(random_subset(rng, n));
    case 2:
      return TargetSpec::of_count(static_cast<std::int32_t>(uniform_in(rng, 0, n)));
    default: {
      std::vector<std::vector<Vertex>> family;
      const auto m = uniform_in(rng, 0, 3);
      for (std::int64_t i = 0; i < m; ++i) {
        auto set = random_subset(rng, n);
        if (set.empty()) set.push_back(static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n))));
        family.push_back(std::move(set));
      }
      return TargetSpec::of_sets(std::move(family));
    }
  }
}

bool certificate_ok(const WalkMetricProvider& p, const TourResult& r, const TargetSpec& target) {
  if (!r.yes || !r.walk) return false;
  if (!p.validate(*r.walk)) return false;
  if (walk_arrival(*r.walk) != r.arrival) return false;
  return target.satisfied_by(p.visited(*r.walk));
}

std::string describe(const StrictTemporalGraph& g) {
  std::ostringstream out;
  write_graph(out, AnyGraph(g));
  return out.str();
}

std::string describe(const NonStrictTemporalGraph& g) {
  std::ostringstream out;
  write_graph(out, AnyGraph(g));
  return out.str();
}

}  // namespace tempex::testing
