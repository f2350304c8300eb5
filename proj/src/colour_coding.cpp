#include "tempex/colour_coding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tempex/random.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tempex {

bool Colouring::uses_every_colour() const {
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  int distinct = 0;
  for (auto c : colour) {
    if (c < k && !seen[c]) {
      seen[c] = 1;
      ++distinct;
    }
  }
  return distinct == k;
}

bool Colouring::injective_on(std::uint64_t subset) const {
  std::uint64_t used = 0;
  for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
    const std::uint64_t bit = std::uint64_t{1} << colour[v];
    if (used & bit) return false;
    used |= bit;
  }
  return true;
}

namespace {

void check_colouring(const WalkMetricProvider& provider, Vertex s, const Colouring& c) {
  const Vertex n = provider.vertex_count();
  if (s < 0 || s >= n) throw InputError("start vertex " + std::to_string(s) + " out of range");
  if (c.k < 1) throw InputError("colouring needs at least one colour");
  if (c.k > kMaxColours) throw CapacityError("more than 64 colours");
  if (c.vertex_count() != n) throw InputError("colouring does not cover every vertex");
  for (auto col : c.colour) {
    if (col >= c.k) throw InputError("colour " + std::to_string(col) + " outside [0, k)");
  }
  if (c.k > 63 || (std::uint64_t{1} << c.k) * static_cast<std::uint64_t>(n) > kMaxColourfulEntries) {
    throw CapacityError("colourful table 2^" + std::to_string(c.k) + " x " + std::to_string(n) +
                        " is too large");
  }
}

DpTableColourful empty_table(Vertex n, int k) {
  DpTableColourful t;
  t.k = k;
  t.n = n;
  t.value.assign((std::size_t{1} << k) * static_cast<std::size_t>(n), kInfinity);
  t.pred.assign(t.value.size(), -1);
  return t;
}

int resolve_threads(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

std::size_t cell(const DpTableColourful& t, std::uint64_t colours, Vertex v) {
  return colours * static_cast<std::size_t>(t.n) + static_cast<std::size_t>(v);
}

TourResult trace_colourful(const WalkMetricProvider& provider, Vertex s, const Colouring& c,
                           const DpTableColourful& table) {
  TourResult result;
  const std::uint64_t full = (std::uint64_t{1} << c.k) - 1;
  Vertex best = -1;
  for (Vertex v = 0; v < table.n; ++v) {
    if (!is_finite(table.at(full, v))) continue;
    if (best < 0 || table.at(full, v) < table.at(full, best)) best = v;
  }
  if (best < 0) return result;

  std::vector<Vertex> order;
  std::uint64_t colours = full;
  for (Vertex cur = best;;) {
    order.push_back(cur);
    const Vertex p = table.pred_at(colours, cur);
    if (p < 0) break;
    colours &= ~(std::uint64_t{1} << c.colour[static_cast<std::size_t>(cur)]);
    cur = p;
  }
  std::reverse(order.begin(), order.end());

  result.yes = true;
  result.arrival = table.at(full, best);
  result.walk = chain_walks(provider, s, order);
  result.order = std::move(order);
  if (walk_arrival(*result.walk) != result.arrival) {
    throw std::logic_error("colourful traceback arrival disagrees with the DP value");
  }
  return result;
}

}  // namespace

DpTableColourful compute_colourful_table(const WalkMetricProvider& provider, Vertex s,
                                         const Colouring& c, SolveOptions opts) {
  check_colouring(provider, s, c);
  const Vertex n = provider.vertex_count();
  const int k = c.k;
  DpTableColourful table = empty_table(n, k);

  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  {
    std::vector<Time> row(all.size());
    ReachScratch scratch;
    provider.arrivals_to(s, 1, all, row, scratch);
    for (Vertex v = 0; v < n; ++v) {
      table.value[cell(table, std::uint64_t{1} << c.colour[static_cast<std::size_t>(v)], v)] =
          row[static_cast<std::size_t>(v)];
    }
  }

  const int threads = resolve_threads(opts.threads);
  for (int size = 1; size < k; ++size) {
    const std::vector<std::uint64_t> layer = subsets_of_size(k, size);
    const auto count = static_cast<std::int64_t>(layer.size());

#pragma omp parallel num_threads(threads)
    {
      ReachScratch scratch;
      std::vector<Vertex> open;
      std::vector<Time> row(static_cast<std::size_t>(n));

#pragma omp for schedule(dynamic, 4)
      for (std::int64_t i = 0; i < count; ++i) {
        const std::uint64_t prev = layer[static_cast<std::size_t>(i)];
        open.clear();
        for (Vertex v = 0; v < n; ++v) {
          if (!(prev >> c.colour[static_cast<std::size_t>(v)] & 1U)) open.push_back(v);
        }
        for (Vertex u = 0; u < n; ++u) {
          if (!(prev >> c.colour[static_cast<std::size_t>(u)] & 1U)) continue;
          const Time h = table.at(prev, u);
          if (!is_finite(h)) continue;
          provider.arrivals_to(u, h, open, std::span<Time>(row.data(), open.size()), scratch);
          for (std::size_t j = 0; j < open.size(); ++j) {
            const Vertex v = open[j];
            const std::size_t at =
                cell(table, prev | std::uint64_t{1} << c.colour[static_cast<std::size_t>(v)], v);
            if (row[j] < table.value[at]) {
              table.value[at] = row[j];
              table.pred[at] = u;
            }
          }
        }
      }
    }
  }
  return table;
}

DpTableColourful compute_colourful_table_serial(const WalkMetricProvider& provider, Vertex s,
                                                const Colouring& c) {
  check_colouring(provider, s, c);
  const Vertex n = provider.vertex_count();
  const int k = c.k;
  DpTableColourful table = empty_table(n, k);
  {
    const ReachLabels from_start = provider.labels(s, 1);
    for (Vertex v = 0; v < n; ++v) {
      table.value[cell(table, std::uint64_t{1} << c.colour[static_cast<std::size_t>(v)], v)] =
          add_saturating(1, from_start.sp(v));
    }
  }
  for (int size = 2; size <= k; ++size) {
    // Label sweeps of the previous size, keyed by (D', u).
    std::vector<ReachLabels> rows(table.value.size());
    std::vector<char> have(table.value.size(), 0);
    for (std::uint64_t prev : subsets_of_size(k, size - 1)) {
      for (Vertex u = 0; u < n; ++u) {
        const Time h = table.at(prev, u);
        if (!(prev >> c.colour[static_cast<std::size_t>(u)] & 1U) || !is_finite(h)) continue;
        rows[cell(table, prev, u)] = provider.labels(u, h);
        have[cell(table, prev, u)] = 1;
      }
    }
    for (std::uint64_t colours : subsets_of_size(k, size)) {
      for (Vertex v = 0; v < n; ++v) {
        const auto cv = c.colour[static_cast<std::size_t>(v)];
        if (!(colours >> cv & 1U)) continue;
        const std::uint64_t prev = colours & ~(std::uint64_t{1} << cv);
        Time best = kInfinity;
        Vertex arg = -1;
        for (Vertex u = 0; u < n; ++u) {
          if (!(prev >> c.colour[static_cast<std::size_t>(u)] & 1U)) continue;
          if (!have[cell(table, prev, u)]) continue;
          const Time cand = add_saturating(table.at(prev, u), rows[cell(table, prev, u)].sp(v));
          if (cand < best) {
            best = cand;
            arg = u;
          }
        }
        table.value[cell(table, colours, v)] = best;
        table.pred[cell(table, colours, v)] = arg;
      }
    }
  }
  return table;
}

TourResult colourful_dp(const WalkMetricProvider& provider, Vertex s, const Colouring& c,
                        SolveOptions opts) {
  return trace_colourful(provider, s, c, compute_colourful_table(provider, s, c, opts));
}

TourResult colourful_dp_serial(const WalkMetricProvider& provider, Vertex s,
                               const Colouring& c) {
  return trace_colourful(provider, s, c, compute_colourful_table_serial(provider, s, c));
}

std::int64_t mc_iterations(int k, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  const double r = std::ceil(1.0 / epsilon);
  const double iters = std::ceil(std::exp(static_cast<double>(k)) * std::log(r));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(iters));
}

Colouring random_colouring(Vertex n, int k, std::uint64_t seed, std::uint64_t iteration) {
  Rng rng(derive_seed(seed, iteration));
  Colouring c;
  c.k = k;
  c.colour.resize(static_cast<std::size_t>(n));
  for (auto& col : c.colour) col = static_cast<std::uint8_t>(uniform_below(rng, static_cast<std::uint64_t>(k)));
  return c;
}

namespace {

TourResult trivial_yes(const WalkMetricProvider& provider, Vertex s) {
  TourResult r;
  r.yes = true;
  r.arrival = 1;
  r.walk = provider.trivial_walk(s);
  if (provider.vertex_count() > 0 && s >= 0) r.order = {s};
  return r;
}

void check_k_arbitrary(const WalkMetricProvider& provider, Vertex s, int k) {
  if (s < 0 || s >= provider.vertex_count()) {
    throw InputError("start vertex " + std::to_string(s) + " out of range");
  }
  if (k < 0) throw InputError("k must be non-negative");
  if (k > kMaxColours) throw CapacityError("k above 64 does not fit the colour-subset encoding");
}

}  // namespace

TourResult solve_k_arbitrary_mc(const WalkMetricProvider& provider, Vertex s, int k,
                                const McConfig& cfg, SolveOptions opts, McReport* report) {
  check_k_arbitrary(provider, s, k);
  const Vertex n = provider.vertex_count();
  const std::int64_t iterations = mc_iterations(k, cfg.epsilon);
  if (report) *report = McReport{iterations, 0, -1};
  if (k > n) return {};
  if (k <= 1) return trivial_yes(provider, s);

  std::vector<Time> arrival(static_cast<std::size_t>(iterations), kInfinity);
  std::vector<char> skipped(static_cast<std::size_t>(iterations), 0);
  const int threads = resolve_threads(opts.threads);

#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (std::int64_t it = 0; it < iterations; ++it) {
    const Colouring c = random_colouring(n, k, cfg.seed, static_cast<std::uint64_t>(it));
    if (!c.uses_every_colour()) {
      skipped[static_cast<std::size_t>(it)] = 1;
      continue;
    }
    const DpTableColourful table = compute_colourful_table(provider, s, c, {1});
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    Time best = kInfinity;
    for (Vertex v = 0; v < n; ++v) best = std::min(best, table.at(full, v));
    arrival[static_cast<std::size_t>(it)] = best;
  }

  std::int64_t winner = -1;
  for (std::int64_t it = 0; it < iterations; ++it) {
    const Time a = arrival[static_cast<std::size_t>(it)];
    if (is_finite(a) && (winner < 0 || a < arrival[static_cast<std::size_t>(winner)])) winner = it;
  }
  if (report) {
    report->skipped = std::count(skipped.begin(), skipped.end(), 1);
    report->best_iteration = winner;
  }
  if (winner < 0) return {};
  // Re-run the winning colouring to rebuild its walk.
  return colourful_dp(provider, s, random_colouring(n, k, cfg.seed, static_cast<std::uint64_t>(winner)),
                      {1});
}

bool is_k_perfect(const HashFamily& family) {
  if (family.k < 1 || family.n < 0 || family.n > 63) return false;
  if (family.k > family.n) return true;
  for (const auto& f : family.functions) {
    if (f.k != family.k || f.vertex_count() != family.n) return false;
  }
  for (std::uint64_t subset : subsets_of_size(family.n, family.k)) {
    const bool hit = std::any_of(family.functions.begin(), family.functions.end(),
                                 [subset](const Colouring& f) { return f.injective_on(subset); });
    if (!hit) return false;
  }
  return true;
}

bool certify(HashFamily& family) {
  family.certified = is_k_perfect(family);
  return family.certified;
}

HashFamily build_verified_family(Vertex n, int k, std::uint64_t seed) {
  if (n < 0 || k < 1) throw InputError("hash family needs n >= 0 and k >= 1");
  if (n > 20 || k > 5) {
    throw CapacityError("verified families are limited to n <= 20 and k <= 5");
  }
  HashFamily family;
  family.n = n;
  family.k = k;
  family.provenance = HashFamily::Provenance::VerifiedRandom;

  if (k == 1 && n >= 1) {
    family.functions.push_back(Colouring{1, std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)});
  } else if (k == n) {
    Colouring identity{k, std::vector<std::uint8_t>(static_cast<std::size_t>(n))};
    for (Vertex v = 0; v < n; ++v) identity.colour[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
    family.functions.push_back(std::move(identity));
  } else if (k < n) {
    std::vector<std::uint64_t> uncovered = subsets_of_size(n, k);
    constexpr std::uint64_t kMaxSamples = 1'000'000;
    std::uint64_t sample = 0;
    while (!uncovered.empty()) {
      if (sample == kMaxSamples) {
        throw Error("hash family construction did not cover all " + std::to_string(k) +
                    "-subsets after 10^6 samples (" + std::to_string(uncovered.size()) +
                    " left)");
      }
      Colouring c = random_colouring(n, k, seed, sample++);
      const auto before = uncovered.size();
      std::erase_if(uncovered, [&c](std::uint64_t subset) { return c.injective_on(subset); });
      if (uncovered.size() < before) family.functions.push_back(std::move(c));
    }
  }
  if (!certify(family)) throw std::logic_error("constructed family failed certification");
  return family;
}

TourResult solve_k_arbitrary_det(const WalkMetricProvider& provider, Vertex s, int k,
                                 const HashFamily& family, SolveOptions opts) {
  check_k_arbitrary(provider, s, k);
  const Vertex n = provider.vertex_count();
  if (k > n) return {};
  if (k <= 1) return trivial_yes(provider, s);
  if (!family.certified || family.n != n || family.k != k) {
    throw InputError("hash family is not certified k-perfect for n = " + std::to_string(n) +
                     ", k = " + std::to_string(k));
  }
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  std::size_t winner = family.functions.size();
  Time best = kInfinity;
  for (std::size_t i = 0; i < family.functions.size(); ++i) {
    const auto& f = family.functions[i];
    if (!f.uses_every_colour()) continue;
    const DpTableColourful table = compute_colourful_table(provider, s, f, opts);
    for (Vertex v = 0; v < n; ++v) {
      if (table.at(full, v) < best) {
        best = table.at(full, v);
        winner = i;
      }
    }
  }
  if (winner == family.functions.size()) return {};
  return colourful_dp(provider, s, family.functions[winner], opts);
}

}  // namespace tempex
