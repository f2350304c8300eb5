#include "tempex/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tempex/random.hpp"

namespace tempex {

namespace {

template <class T>
void shuffle(std::vector<T>& xs, Rng& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) {
    std::swap(xs[i - 1], xs[uniform_below(rng, i)]);
  }
}

}  // namespace

StrictTemporalGraph random_strict_graph(Vertex n, Time lifetime, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  if (n < 0 || lifetime < 0) throw InputError("n and L must be non-negative");
  Rng rng(seed);
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

NonStrictTemporalGraph random_ns_graph(Vertex n, Time lifetime, std::int32_t gamma,
                                       std::uint64_t seed) {
  if (gamma < 1) throw InputError("gamma must be at least 1");
  if (n < 1 || lifetime < 0) throw InputError("need n >= 1 and L >= 0");
  Rng rng(seed);
  const std::int32_t parts = std::min<std::int32_t>(gamma, n);
  std::vector<Partition> steps;
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::vector<Vertex> cuts(static_cast<std::size_t>(n - 1));
  for (Time t = 1; t <= lifetime; ++t) {
    std::iota(order.begin(), order.end(), 0);
    shuffle(order, rng);
    std::iota(cuts.begin(), cuts.end(), 1);
    // Partial Fisher-Yates: the first parts - 1 slots become the cuts.
    for (std::int32_t i = 0; i + 1 < parts; ++i) {
      const auto j = static_cast<std::size_t>(i) + uniform_below(rng, cuts.size() - static_cast<std::size_t>(i));
      std::swap(cuts[static_cast<std::size_t>(i)], cuts[j]);
    }
    std::vector<Vertex> bounds(cuts.begin(), cuts.begin() + (parts - 1));
    std::sort(bounds.begin(), bounds.end());
    bounds.push_back(n);
    Partition part;
    Vertex from = 0;
    for (Vertex to : bounds) {
      std::vector<Vertex> comp(order.begin() + from, order.begin() + to);
      std::sort(comp.begin(), comp.end());
      part.push_back(std::move(comp));
      from = to;
    }
    steps.push_back(std::move(part));
  }
  return NonStrictTemporalGraph(n, lifetime, std::move(steps));
}

}  // namespace tempex
