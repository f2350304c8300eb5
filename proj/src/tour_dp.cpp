#include "tempex/tour_dp.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tempex {

namespace {

std::vector<Vertex> normalise_targets(const WalkMetricProvider& provider, Vertex s,
                                      std::span<const Vertex> targets) {
  const Vertex n = provider.vertex_count();
  if (s < 0 || s >= n) throw InputError("start vertex " + std::to_string(s) + " out of range");
  std::vector<Vertex> xs(targets.begin(), targets.end());
  for (Vertex x : xs) {
    if (x < 0 || x >= n) throw InputError("target vertex " + std::to_string(x) + " out of range");
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (static_cast<int>(xs.size()) > kMaxEncodedTargets) {
    throw CapacityError("target set of size " + std::to_string(xs.size()) +
                        " exceeds the 64-bit subset encoding");
  }
  if (static_cast<int>(xs.size()) > kMaxTableTargets) {
    throw CapacityError("target set of size " + std::to_string(xs.size()) +
                        " exceeds the DP table bound of " + std::to_string(kMaxTableTargets));
  }
  return xs;
}

DpTableFixed empty_table(std::vector<Vertex> xs) {
  DpTableFixed table;
  const std::size_t k = xs.size();
  table.targets = std::move(xs);
  table.value.assign((std::size_t{1} << k) * k, kInfinity);
  table.pred.assign(table.value.size(), DpTableFixed::kNoPred);
  return table;
}

void fill_singletons(const WalkMetricProvider& provider, Vertex s, DpTableFixed& table) {
  const int k = table.size();
  std::vector<Time> row(static_cast<std::size_t>(k));
  ReachScratch scratch;
  provider.arrivals_to(s, 1, table.targets, row, scratch);
  for (int v = 0; v < k; ++v) {
    table.value[(std::uint64_t{1} << v) * static_cast<std::size_t>(k) + static_cast<std::size_t>(v)] =
        row[static_cast<std::size_t>(v)];
  }
}

int resolve_threads(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

}  // namespace

std::vector<std::uint64_t> subsets_of_size(int k, int size) {
  if (k < 0 || k > 63) throw CapacityError("subset enumeration supports at most 63 bits");
  std::vector<std::uint64_t> out;
  if (size < 0 || size > k) return out;
  if (size == 0) return {0};
  const std::uint64_t limit = std::uint64_t{1} << k;
  // Gosper's hack: next pattern with the same popcount.
  for (std::uint64_t x = (std::uint64_t{1} << size) - 1; x < limit;) {
    out.push_back(x);
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

DpTableFixed compute_fixed_table(const WalkMetricProvider& provider, Vertex s,
                                 std::span<const Vertex> targets, SolveOptions opts) {
  DpTableFixed table = empty_table(normalise_targets(provider, s, targets));
  const int k = table.size();
  if (k == 0) return table;
  fill_singletons(provider, s, table);
  const std::size_t stride = static_cast<std::size_t>(k);
  const int threads = resolve_threads(opts.threads);

  for (int size = 1; size < k; ++size) {
    const std::vector<std::uint64_t> layer = subsets_of_size(k, size);
    const auto count = static_cast<std::int64_t>(layer.size());

#pragma omp parallel num_threads(threads)
    {
      ReachScratch scratch;
      std::vector<Vertex> open;
      std::vector<int> open_pos;
      std::vector<Time> row(stride);

#pragma omp for schedule(dynamic, 16)
      for (std::int64_t i = 0; i < count; ++i) {
        const std::uint64_t prev = layer[static_cast<std::size_t>(i)];
        open.clear();
        open_pos.clear();
        for (int v = 0; v < k; ++v) {
          if (!(prev >> v & 1U)) {
            open.push_back(table.targets[static_cast<std::size_t>(v)]);
            open_pos.push_back(v);
          }
        }
        for (int u = 0; u < k; ++u) {
          if (!(prev >> u & 1U)) continue;
          const Time f = table.value[prev * stride + static_cast<std::size_t>(u)];
          if (!is_finite(f)) continue;
          provider.arrivals_to(table.targets[static_cast<std::size_t>(u)], f, open,
                               std::span<Time>(row.data(), open.size()), scratch);
          for (std::size_t j = 0; j < open.size(); ++j) {
            const int v = open_pos[j];
            const std::size_t cell =
                (prev | std::uint64_t{1} << v) * stride + static_cast<std::size_t>(v);
            // u ascends, so a strict improvement keeps the smallest argmin.
            if (row[j] < table.value[cell]) {
              table.value[cell] = row[j];
              table.pred[cell] = static_cast<std::uint8_t>(u);
            }
          }
        }
      }
    }
  }
  return table;
}

DpTableFixed compute_fixed_table_serial(const WalkMetricProvider& provider, Vertex s,
                                        std::span<const Vertex> targets) {
  DpTableFixed table = empty_table(normalise_targets(provider, s, targets));
  const int k = table.size();
  if (k == 0) return table;
  const std::size_t stride = static_cast<std::size_t>(k);

  {
    const ReachLabels from_start = provider.labels(s, 1);
    for (int v = 0; v < k; ++v) {
      table.value[(std::uint64_t{1} << v) * stride + static_cast<std::size_t>(v)] =
          add_saturating(1, from_start.sp(table.targets[static_cast<std::size_t>(v)]));
    }
  }

  std::vector<std::int32_t> rank(std::size_t{1} << k, -1);
  for (int size = 2; size <= k; ++size) {
    // sp rows for every (S', u) of the previous size, kept until this size is done.
    const std::vector<std::uint64_t> prev_layer = subsets_of_size(k, size - 1);
    std::vector<Time> rows(prev_layer.size() * stride * stride, kInfinity);
    for (std::size_t r = 0; r < prev_layer.size(); ++r) {
      const std::uint64_t prev = prev_layer[r];
      rank[prev] = static_cast<std::int32_t>(r);
      for (int u = 0; u < k; ++u) {
        if (!(prev >> u & 1U)) continue;
        const Time f = table.value[prev * stride + static_cast<std::size_t>(u)];
        if (!is_finite(f)) continue;
        const ReachLabels labels = provider.labels(table.targets[static_cast<std::size_t>(u)], f);
        for (int v = 0; v < k; ++v) {
          rows[(r * stride + static_cast<std::size_t>(u)) * stride + static_cast<std::size_t>(v)] =
              add_saturating(f, labels.sp(table.targets[static_cast<std::size_t>(v)]));
        }
      }
    }
    for (std::uint64_t set : subsets_of_size(k, size)) {
      for (int v = 0; v < k; ++v) {
        if (!(set >> v & 1U)) continue;
        const std::uint64_t prev = set & ~(std::uint64_t{1} << v);
        const auto r = static_cast<std::size_t>(rank[prev]);
        Time best = kInfinity;
        std::uint8_t arg = DpTableFixed::kNoPred;
        for (int u = 0; u < k; ++u) {
          if (!(prev >> u & 1U)) continue;
          const Time cand =
              rows[(r * stride + static_cast<std::size_t>(u)) * stride + static_cast<std::size_t>(v)];
          if (cand < best) {
            best = cand;
            arg = static_cast<std::uint8_t>(u);
          }
        }
        table.value[set * stride + static_cast<std::size_t>(v)] = best;
        table.pred[set * stride + static_cast<std::size_t>(v)] = arg;
      }
    }
  }
  return table;
}

Walk chain_walks(const WalkMetricProvider& provider, Vertex s, std::span<const Vertex> order) {
  Walk walk = provider.trivial_walk(s);
  Vertex at = s;
  Time now = 1;
  for (Vertex next : order) {
    provider.append(walk, provider.walk(at, next, now));
    at = next;
    now = walk_arrival(walk);
  }
  return walk;
}

namespace {

TourResult trace_fixed(const WalkMetricProvider& provider, Vertex s, const DpTableFixed& table) {
  TourResult result;
  const int k = table.size();
  if (k == 0) {
    result.yes = true;
    result.arrival = 1;
    result.walk = provider.trivial_walk(s);
    return result;
  }
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  int best = -1;
  for (int v = 0; v < k; ++v) {
    if (best < 0 || table.at(full, v) < table.at(full, best)) best = v;
  }
  if (!is_finite(table.at(full, best))) return result;

  std::vector<Vertex> order;
  std::uint64_t set = full;
  int cur = best;
  while (true) {
    order.push_back(table.targets[static_cast<std::size_t>(cur)]);
    const std::uint8_t p = table.pred_at(set, cur);
    if (p == DpTableFixed::kNoPred) break;
    set &= ~(std::uint64_t{1} << cur);
    cur = p;
  }
  std::reverse(order.begin(), order.end());

  result.yes = true;
  result.arrival = table.at(full, best);
  result.walk = chain_walks(provider, s, order);
  result.order = std::move(order);
  if (walk_arrival(*result.walk) != result.arrival) {
    throw std::logic_error("traceback walk arrival disagrees with the DP value");
  }
  return result;
}

}  // namespace

TourResult solve_k_fixed(const WalkMetricProvider& provider, Vertex s,
                         std::span<const Vertex> targets, SolveOptions opts) {
  return trace_fixed(provider, s, compute_fixed_table(provider, s, targets, opts));
}

TourResult solve_k_fixed_serial(const WalkMetricProvider& provider, Vertex s,
                                std::span<const Vertex> targets) {
  return trace_fixed(provider, s, compute_fixed_table_serial(provider, s, targets));
}

TourResult solve_texp(const WalkMetricProvider& provider, Vertex s, SolveOptions opts) {
  std::vector<Vertex> all(static_cast<std::size_t>(provider.vertex_count()));
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Vertex>(v);
  return solve_k_fixed(provider, s, all, opts);
}

}  // namespace tempex
