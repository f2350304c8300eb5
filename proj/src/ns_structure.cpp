#include "tempex/ns_structure.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "tempex/ns_search.hpp"

namespace tempex {

const char* to_string(TransitionKind k) {
  switch (k) {
    case TransitionKind::Free: return "free";
    case TransitionKind::Restricted: return "restricted";
    case TransitionKind::Identical: return "identical";
  }
  return "?";
}

const char* to_string(Gamma2Rule r) {
  switch (r) {
    case Gamma2Rule::NoSteps: return "no-steps";
    case Gamma2Rule::SingleComponent: return "single-component";
    case Gamma2Rule::RestrictedAfterFree: return "restricted-after-free";
    case Gamma2Rule::ShrinkingStart: return "shrinking-start";
    case Gamma2Rule::ManyFree: return "many-free";
    case Gamma2Rule::Enumeration: return "enumeration";
  }
  return "?";
}

namespace {

using Counts = std::array<std::array<std::int64_t, 2>, 2>;

TransitionClass classify_counts(const Counts& c) {
  int empty = 0;
  int ei = -1;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (c[i][j] == 0) {
        ++empty;
        ei = i;
      }
    }
  }
  if (empty == 0) return {TransitionKind::Free, -1, -1};
  if (empty == 1) return {TransitionKind::Restricted, 1 - ei, ei};
  return {TransitionKind::Identical, -1, -1};
}

}  // namespace

TransitionClass classify_transition(const Partition& from, const Partition& to) {
  if (from.size() != 2 || to.size() != 2) {
    throw InputError("transition classification needs two components on both sides");
  }
  std::map<Vertex, int> side;
  for (int i = 0; i < 2; ++i) {
    if (from[static_cast<std::size_t>(i)].empty()) throw InputError("empty component");
    for (Vertex v : from[static_cast<std::size_t>(i)]) {
      if (!side.emplace(v, i).second) throw InputError("components overlap");
    }
  }
  Counts counts{};
  std::size_t seen = 0;
  for (int j = 0; j < 2; ++j) {
    if (to[static_cast<std::size_t>(j)].empty()) throw InputError("empty component");
    for (Vertex v : to[static_cast<std::size_t>(j)]) {
      const auto it = side.find(v);
      if (it == side.end()) throw InputError("partitions cover different vertex sets");
      ++counts[static_cast<std::size_t>(it->second)][static_cast<std::size_t>(j)];
      ++seen;
    }
  }
  if (seen != side.size()) throw InputError("partitions cover different vertex sets");
  return classify_counts(counts);
}

namespace {

struct Block {
  Time first;
  Time last;
};

TransitionClass classify_steps(const NonStrictTemporalGraph& g, Time t, Time u) {
  Counts counts{};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    ++counts[static_cast<std::size_t>(g.component_index(t, v))]
            [static_cast<std::size_t>(g.component_index(u, v))];
  }
  return classify_counts(counts);
}

class Gamma2Solver {
 public:
  Gamma2Solver(const NonStrictTemporalGraph& g, Vertex s, const TargetSpec& target,
               Gamma2Report& report)
      : g_(g), s_(s), target_(target), report_(report) {}

  TourResult run() {
    const Time lifetime = g_.lifetime();
    if (lifetime == 0) {
      report_.rule = Gamma2Rule::NoSteps;
      return finish(NonStrictWalk{s_, {}, 1}, false);
    }

    for (Time t = 1; t <= lifetime; ++t) {
      if (g_.gamma(t) == 1) {
        report_.rule = Gamma2Rule::SingleComponent;
        const ComponentRef whole{t, 0};
        return finish(*walk_through(g_, s_, std::span<const ComponentRef>(&whole, 1)), true);
      }
    }

    std::vector<Block> blocks{{1, 1}};
    for (Time t = 2; t <= lifetime; ++t) {
      if (classify_steps(g_, t - 1, t).kind == TransitionKind::Identical) {
        blocks.back().last = t;
      } else {
        blocks.push_back({t, t});
      }
    }
    report_.blocks = static_cast<std::int32_t>(blocks.size());
    std::vector<TransitionClass> trans;
    for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
      trans.push_back(classify_steps(g_, blocks[b].last, blocks[b + 1].first));
    }

    for (std::size_t i = 0; i + 1 < trans.size(); ++i) {
      if (trans[i].kind == TransitionKind::Free && trans[i + 1].kind == TransitionKind::Restricted) {
        report_.rule = Gamma2Rule::RestrictedAfterFree;
        return shrink_then_grow(blocks, trans, i + 1);
      }
    }

    // Only restricted transitions precede the free ones now. Outside a
    // shrinking component the walk is forced to the growing superset, which
    // still holds s.
    std::size_t prefix = 0;
    while (prefix < trans.size() && trans[prefix].kind == TransitionKind::Restricted) {
      if (g_.component_index(blocks[prefix].last, s_) == trans[prefix].shrinking) {
        report_.rule = Gamma2Rule::ShrinkingStart;
        return shrink_then_grow(blocks, trans, prefix);
      }
      ++prefix;
    }

    const std::size_t free_count = trans.size() - prefix;
    report_.free_transitions = static_cast<std::int32_t>(free_count);
    const auto n = static_cast<std::uint64_t>(g_.vertex_count());
    if (free_count >= 1 && (free_count - 1 >= 63 || (std::uint64_t{1} << (free_count - 1)) > n)) {
      report_.rule = Gamma2Rule::ManyFree;
      return finish(greedy_walk(blocks, prefix), true);
    }

    report_.rule = Gamma2Rule::Enumeration;
    const std::uint64_t total = std::uint64_t{1} << free_count;
    std::vector<Vertex> reps(blocks.size(), s_);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      ++report_.enumerated;
      for (std::size_t j = 0; j < free_count; ++j) {
        const std::size_t b = prefix + 1 + j;
        const auto pick = static_cast<std::int32_t>(mask >> (free_count - 1 - j) & 1U);
        reps[b] = g_.component({blocks[b].first, pick}).front();
      }
      NonStrictWalk w = build(blocks, reps);
      if (target_.satisfied_by(visited_vertices(g_, w))) return finish(std::move(w), true);
    }
    return {};
  }

 private:
  /// Occupies the shrinking component at the end of block b and the
  /// superset of the growing one next; together they cover V.
  TourResult shrink_then_grow(const std::vector<Block>& blocks,
                              const std::vector<TransitionClass>& trans, std::size_t b) {
    const Time at = blocks[b].last;
    const ComponentRef shrinking{at, trans[b].shrinking};
    const Vertex grown = g_.component({at, trans[b].growing}).front();
    const Time next = blocks[b + 1].first;
    const std::array<ComponentRef, 2> waypoints{shrinking, g_.component_of(next, grown)};
    const auto w = walk_through(g_, s_, waypoints);
    if (!w) throw std::logic_error("shrinking component is not reachable");
    return finish(*w, true);
  }

  /// Stays with s through the restricted prefix, then at each free
  /// transition takes the component with more unvisited vertices.
  NonStrictWalk greedy_walk(const std::vector<Block>& blocks, std::size_t prefix) {
    std::vector<Vertex> reps(blocks.size(), s_);
    VertexSet seen(static_cast<std::size_t>(g_.vertex_count()));
    for (std::size_t b = 0; b <= prefix; ++b) {
      for (Vertex v : g_.component(g_.component_of(blocks[b].first, s_))) {
        seen.set(static_cast<std::size_t>(v));
      }
    }
    for (std::size_t b = prefix + 1; b < blocks.size(); ++b) {
      std::array<std::size_t, 2> fresh{};
      for (std::int32_t j = 0; j < 2; ++j) {
        for (Vertex v : g_.component({blocks[b].first, j})) {
          if (!seen.test(static_cast<std::size_t>(v))) ++fresh[static_cast<std::size_t>(j)];
        }
      }
      const std::int32_t pick = fresh[1] > fresh[0] ? 1 : 0;
      const auto comp = g_.component({blocks[b].first, pick});
      reps[b] = comp.front();
      for (Vertex v : comp) seen.set(static_cast<std::size_t>(v));
    }
    return build(blocks, reps);
  }

  NonStrictWalk build(const std::vector<Block>& blocks, const std::vector<Vertex>& reps) const {
    NonStrictWalk w{s_, {}, blocks.back().last};
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (Time t = blocks[b].first; t <= blocks[b].last; ++t) {
        w.steps.push_back(g_.component_of(t, reps[b]));
      }
    }
    return w;
  }

  /// Cuts the walk at the first satisfying step. `must` marks rules that
  /// guarantee a full exploration.
  TourResult finish(const NonStrictWalk& w, bool must) const {
    if (!validate_ns_walk(g_, w)) throw std::logic_error("two-component certificate is invalid");
    auto cut = truncate_to_target(g_, w, target_);
    if (!cut) {
      if (must) throw std::logic_error("two-component certificate misses the target");
      return {};
    }
    TourResult r;
    r.yes = true;
    r.arrival = cut->arrival;
    r.walk = std::move(*cut);
    return r;
  }

  const NonStrictTemporalGraph& g_;
  Vertex s_;
  const TargetSpec& target_;
  Gamma2Report& report_;
};

}  // namespace

TourResult solve_gamma2(const NonStrictTemporalGraph& g, Vertex s, const TargetSpec& target,
                        Gamma2Report* report) {
  if (s < 0 || s >= g.vertex_count()) {
    throw InputError("start vertex " + std::to_string(s) + " out of range");
  }
  target.validate(g.vertex_count());
  if (g.gamma() > 2) {
    throw CapabilityError("the two-component procedure needs at most 2 components per step (got " +
                          std::to_string(g.gamma()) + "); use the search tree");
  }
  Gamma2Report local;
  Gamma2Solver solver(g, s, target, report ? *report : local);
  return solver.run();
}

}  // namespace tempex
