#include "tempex/oracles.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>
#include <unordered_set>

namespace tempex {

void OracleBudget::check() const {
  if (max_vertices < 0 || max_lifetime < 0 || max_states < 0) {
    throw InputError("oracle caps must be non-negative");
  }
  if (max_vertices > kMaxVertices || max_lifetime > kMaxLifetime || max_states > kMaxStates) {
    throw InputError("oracle caps above the maxima n <= 32, L <= 16, states <= 10^7");
  }
}

OracleBudget OracleBudget::with_env_override() const {
  OracleBudget out = *this;
  const char* raw = std::getenv("TEMPEX_BUDGET");
  if (raw == nullptr || *raw == '\0') return out;
  const std::string_view text(raw);
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value < 0) {
    throw InputError("TEMPEX_BUDGET must be a non-negative integer, got '" + std::string(text) + "'");
  }
  out.max_states = std::min(out.max_states, value);
  return out;
}

namespace {

using Mask = std::uint64_t;

/// The target predicate on visited sets encoded as bit masks.
struct MaskTarget {
  TargetSpec::Kind kind;
  Mask required = 0;
  int count = 0;
  std::vector<Mask> sets;

  MaskTarget(const TargetSpec& t, Vertex n) : kind(t.kind) {
    switch (t.kind) {
      case TargetSpec::Kind::All:
        required = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
        break;
      case TargetSpec::Kind::Fixed:
        for (Vertex v : t.vertices) required |= Mask{1} << v;
        break;
      case TargetSpec::Kind::Count:
        count = t.count;
        break;
      case TargetSpec::Kind::Sets:
        for (const auto& set : t.sets) {
          Mask m = 0;
          for (Vertex v : set) m |= Mask{1} << v;
          sets.push_back(m);
        }
        break;
    }
  }

  bool operator()(Mask visited) const {
    switch (kind) {
      case TargetSpec::Kind::All:
      case TargetSpec::Kind::Fixed:
        return (visited & required) == required;
      case TargetSpec::Kind::Count:
        return std::popcount(visited) >= count;
      case TargetSpec::Kind::Sets:
        return std::all_of(sets.begin(), sets.end(), [visited](Mask m) { return (m & visited) != 0; });
    }
    return false;
  }
};

void check_instance(Vertex n, Time lifetime, Vertex s, const TargetSpec& target,
                    const OracleBudget& budget) {
  budget.check();
  if (s < 0 || s >= n) throw InputError("start vertex " + std::to_string(s) + " out of range");
  target.validate(n);
  if (n > budget.max_vertices) {
    throw BudgetError("oracle vertex cap " + std::to_string(budget.max_vertices) +
                      " exceeded (n = " + std::to_string(n) + ")");
  }
  if (lifetime > budget.max_lifetime) {
    throw BudgetError("oracle lifetime cap " + std::to_string(budget.max_lifetime) +
                      " exceeded (L = " + std::to_string(lifetime) + ")");
  }
}

[[noreturn]] void state_budget_exceeded(const OracleBudget& budget) {
  throw BudgetError("oracle state cap " + std::to_string(budget.max_states) + " exceeded");
}

class StrictSearch {
 public:
  StrictSearch(const StrictTemporalGraph& g, const MaskTarget& target, const OracleBudget& budget)
      : g_(g), target_(target), budget_(budget) {}

  void run(Vertex s) { visit(s, 1, Mask{1} << s); }

  Time best = kInfinity;
  std::vector<Traversal> best_path;

 private:
  void visit(Vertex v, Time now, Mask visited) {
    if (target_(visited)) {
      if (now < best) {
        best = now;
        best_path = path_;
      }
      return;
    }
    // Any continuation arrives at now + 1 or later.
    if (now + 1 >= best || now > g_.lifetime()) return;
    const Mask key = visited | static_cast<Mask>(now) << 32 | static_cast<Mask>(v) << 40;
    if (!seen_.insert(key).second) return;
    if (static_cast<std::int64_t>(seen_.size()) > budget_.max_states) state_budget_exceeded(budget_);

    for (Vertex w : g_.neighbours(now, v)) {
      path_.push_back({now, v, w});
      visit(w, now + 1, visited | Mask{1} << w);
      path_.pop_back();
    }
    visit(v, now + 1, visited);
  }

  const StrictTemporalGraph& g_;
  const MaskTarget& target_;
  const OracleBudget& budget_;
  std::unordered_set<Mask> seen_;
  std::vector<Traversal> path_;
};

}  // namespace

TourResult bf_strict(const StrictTemporalGraph& g, Vertex s, const TargetSpec& target,
                     const OracleBudget& budget) {
  check_instance(g.vertex_count(), g.lifetime(), s, target, budget);
  const MaskTarget predicate(target, g.vertex_count());
  StrictSearch search(g, predicate, budget);
  search.run(s);
  TourResult result;
  if (!is_finite(search.best)) return result;
  result.yes = true;
  result.arrival = search.best;
  result.walk = StrictWalk{s, 1, search.best_path, search.best};
  return result;
}

TourResult bf_ns(const NonStrictTemporalGraph& g, Vertex s, const TargetSpec& target,
                 const OracleBudget& budget) {
  check_instance(g.vertex_count(), g.lifetime(), s, target, budget);
  const MaskTarget predicate(target, g.vertex_count());
  TourResult result;
  const Time lifetime = g.lifetime();
  if (lifetime == 0) {
    if (!predicate(Mask{1} << s)) return result;
    result.yes = true;
    result.arrival = 1;
    result.walk = NonStrictWalk{s, {}, 1};
    return result;
  }

  std::vector<std::vector<Mask>> comp_mask(static_cast<std::size_t>(lifetime));
  for (Time t = 1; t <= lifetime; ++t) {
    for (const auto& comp : g.step(t)) {
      Mask m = 0;
      for (Vertex v : comp) m |= Mask{1} << v;
      comp_mask[static_cast<std::size_t>(t - 1)].push_back(m);
    }
  }

  struct State {
    std::int32_t comp;
    Mask visited;
    std::int32_t parent;
  };
  std::vector<std::vector<State>> levels(1);
  const std::int32_t first = g.component_index(1, s);
  levels[0].push_back({first, comp_mask[0][static_cast<std::size_t>(first)] | Mask{1} << s, -1});
  std::int64_t states = 1;

  for (Time t = 1;; ++t) {
    const auto& level = levels[static_cast<std::size_t>(t - 1)];
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (!predicate(level[i].visited)) continue;
      NonStrictWalk walk{s, std::vector<ComponentRef>(static_cast<std::size_t>(t)), t};
      std::int32_t at = static_cast<std::int32_t>(i);
      for (Time u = t; u >= 1; --u) {
        const State& st = levels[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(at)];
        walk.steps[static_cast<std::size_t>(u - 1)] = {u, st.comp};
        at = st.parent;
      }
      result.yes = true;
      result.arrival = t;
      result.walk = std::move(walk);
      return result;
    }
    if (t == lifetime || level.empty()) return result;

    const auto& next_masks = comp_mask[static_cast<std::size_t>(t)];
    const auto& here_masks = comp_mask[static_cast<std::size_t>(t - 1)];
    std::vector<State> next;
    std::vector<std::unordered_set<Mask>> seen(next_masks.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Mask here = here_masks[static_cast<std::size_t>(level[i].comp)];
      for (std::size_t j = 0; j < next_masks.size(); ++j) {
        if ((here & next_masks[j]) == 0) continue;
        const Mask visited = level[i].visited | next_masks[j];
        if (!seen[j].insert(visited).second) continue;
        if (++states > budget.max_states) state_budget_exceeded(budget);
        next.push_back({static_cast<std::int32_t>(j), visited, static_cast<std::int32_t>(i)});
      }
    }
    levels.push_back(std::move(next));
  }
}

TourResult bf_fixed_orders(const WalkMetricProvider& provider, Vertex s,
                           std::span<const Vertex> targets) {
  const Vertex n = provider.vertex_count();
  if (s < 0 || s >= n) throw InputError("start vertex " + std::to_string(s) + " out of range");
  std::vector<Vertex> order(targets.begin(), targets.end());
  for (Vertex x : order) {
    if (x < 0 || x >= n) throw InputError("target vertex " + std::to_string(x) + " out of range");
  }
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  if (order.size() > 8) throw CapacityError("order enumeration is limited to 8 targets");

  TourResult result;
  std::vector<Vertex> best_order;
  Time best = kInfinity;
  do {
    Vertex at = s;
    Time now = 1;
    for (Vertex x : order) {
      now = provider.labels(at, now).arrival[static_cast<std::size_t>(x)];
      if (!is_finite(now)) break;
      at = x;
    }
    if (now < best) {
      best = now;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  if (!is_finite(best)) return result;
  result.yes = true;
  result.arrival = best;
  result.walk = chain_walks(provider, s, best_order);
  result.order = std::move(best_order);
  return result;
}

bool bf_set_texp(const StrictTemporalGraph& g, Vertex s,
                 const std::vector<std::vector<Vertex>>& family, const OracleBudget& budget) {
  return bf_strict(g, s, TargetSpec::of_sets(family), budget).yes;
}

bool bf_set_ns_texp(const NonStrictTemporalGraph& g, Vertex s,
                    const std::vector<std::vector<Vertex>>& family, const OracleBudget& budget) {
  return bf_ns(g, s, TargetSpec::of_sets(family), budget).yes;
}

}  // namespace tempex
