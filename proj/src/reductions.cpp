#include "tempex/reductions.hpp"

#include <algorithm>
#include <string>

#include "tempex/tour_dp.hpp"

namespace tempex {

void SetSystem::validate() const {
  if (n < 0) throw InputError("element count must be non-negative");
  if (k < 0) throw InputError("budget k must be non-negative");
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (sets[j].empty()) throw InputError("set " + std::to_string(j + 1) + " is empty");
    for (auto a : sets[j]) {
      if (a < 0 || a >= n) {
        throw InputError("element " + std::to_string(a) + " of set " + std::to_string(j + 1) +
                         " out of range");
      }
    }
  }
}

namespace {

std::vector<std::vector<std::int32_t>> normalised(const SetSystem& sys) {
  auto sets = sys.sets;
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return sets;
}

void check_caps(const SetSystem& sys) {
  if (sys.n > 20 || sys.sets.size() > 12) {
    throw CapacityError("brute-force source solvers need n <= 20 and m <= 12");
  }
}

std::uint32_t mask_of(const std::vector<std::int32_t>& set) {
  std::uint32_t m = 0;
  for (auto a : set) m |= std::uint32_t{1} << a;
  return m;
}

}  // namespace

SetTexpInstance hitting_set_to_set_texp(const HittingSetInstance& hs) {
  hs.validate();
  const Vertex n = hs.n + 1;
  std::vector<Edge> complete;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) complete.push_back({u, v});
  }
  std::vector<std::vector<Edge>> layers(static_cast<std::size_t>(hs.k), complete);
  return {StrictTemporalGraph(n, hs.k, std::move(layers)), hs.n, normalised(hs)};
}

SetNsTexpInstance set_cover_to_set_ns_texp(const SetCoverInstance& sc) {
  sc.validate();
  const auto sets = normalised(sc);
  const auto m = static_cast<Vertex>(sets.size());
  std::vector<char> covered(static_cast<std::size_t>(sc.n), 0);
  for (const auto& s : sets) {
    for (auto a : s) covered[static_cast<std::size_t>(a)] = 1;
  }
  for (std::int32_t a = 0; a < sc.n; ++a) {
    if (!covered[static_cast<std::size_t>(a)]) {
      throw InputError("element " + std::to_string(a) + " lies in no set");
    }
  }

  // y ids per set, and the family member of each element.
  Vertex next = m + 1;
  std::vector<std::vector<Vertex>> ys(sets.size());
  std::vector<std::vector<Vertex>> family(static_cast<std::size_t>(sc.n));
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (auto a : sets[j]) {
      ys[j].push_back(next);
      family[static_cast<std::size_t>(a)].push_back(next);
      ++next;
    }
  }
  const Vertex n = next;

  Partition odd;
  odd.emplace_back();
  for (Vertex v = 0; v <= m; ++v) odd.back().push_back(v);
  for (Vertex y = m + 1; y < n; ++y) odd.push_back({y});

  Partition even;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    std::vector<Vertex> comp{static_cast<Vertex>(j + 1)};
    comp.insert(comp.end(), ys[j].begin(), ys[j].end());
    even.push_back(std::move(comp));
  }
  even.push_back({0});

  const Time lifetime = 2 * sc.k;
  std::vector<Partition> steps;
  for (Time t = 1; t <= lifetime; ++t) steps.push_back(t % 2 == 1 ? odd : even);
  return {NonStrictTemporalGraph(n, lifetime, std::move(steps)), 0, std::move(family)};
}

bool solve_hitting_set_bf(const HittingSetInstance& hs) {
  hs.validate();
  check_caps(hs);
  std::vector<std::uint32_t> masks;
  for (const auto& s : hs.sets) masks.push_back(mask_of(s));
  for (int size = 0; size <= std::min(hs.k, hs.n); ++size) {
    for (std::uint64_t pick : subsets_of_size(hs.n, size)) {
      if (std::all_of(masks.begin(), masks.end(), [pick](std::uint32_t m) { return (m & pick) != 0; })) {
        return true;
      }
    }
  }
  return false;
}

bool solve_set_cover_bf(const SetCoverInstance& sc) {
  sc.validate();
  check_caps(sc);
  const auto m = static_cast<int>(sc.sets.size());
  const std::uint32_t all = (std::uint32_t{1} << sc.n) - 1;
  std::vector<std::uint32_t> masks;
  for (const auto& s : sc.sets) masks.push_back(mask_of(s));
  for (int size = 0; size <= std::min(sc.k, m); ++size) {
    for (std::uint64_t pick : subsets_of_size(m, size)) {
      std::uint32_t got = 0;
      for (int j = 0; j < m; ++j) {
        if (pick >> j & 1U) got |= masks[static_cast<std::size_t>(j)];
      }
      if (got == all) return true;
    }
  }
  return false;
}

}  // namespace tempex
