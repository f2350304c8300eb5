#pragma once

#include <cstdint>
#include <vector>

#include "tempex/tour_dp.hpp"

namespace tempex {

/// c : V -> {0, ..., k-1}. (Colours are 0-based here; colour j plays the
/// role of colour j+1 in the usual [k] notation.)
struct Colouring {
  int k = 0;
  std::vector<std::uint8_t> colour;

  Vertex vertex_count() const noexcept { return static_cast<Vertex>(colour.size()); }
  bool uses_every_colour() const;
  /// True iff the members of `subset` (a bit pattern over vertex ids) get
  /// pairwise distinct colours.
  bool injective_on(std::uint64_t subset) const;
};

/// Largest k a colour subset fits into.
inline constexpr int kMaxColours = 64;
/// Bound on 2^k * n entries of a colourful table.
inline constexpr std::uint64_t kMaxColourfulEntries = std::uint64_t{1} << 26;

/// H(D, v): earliest arrival of a walk from (s, 1) that collects every
/// colour of D and ends at v, c(v) in D. Indexed by D * n + v.
struct DpTableColourful {
  int k = 0;
  Vertex n = 0;
  std::vector<Time> value;
  std::vector<Vertex> pred;  // -1 when |D| = 1 or unreachable

  Time at(std::uint64_t colours, Vertex v) const {
    return value[colours * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v)];
  }
  Vertex pred_at(std::uint64_t colours, Vertex v) const {
    return pred[colours * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v)];
  }
};

/// Parallel over colour subsets of one size. Each H(D, v) is written only
/// while processing D - c(v), so workers never share a cell.
DpTableColourful compute_colourful_table(const WalkMetricProvider& provider, Vertex s,
                                         const Colouring& colouring, SolveOptions opts = {});

/// Serial reference evaluating the recurrence in pull form with full label sweeps.
DpTableColourful compute_colourful_table_serial(const WalkMetricProvider& provider, Vertex s,
                                                const Colouring& colouring);

/// Foremost [k]-colourful walk from (s, 1), or NO. Throws InputError when
/// the colouring does not cover exactly the provider's vertices with colours < k.
TourResult colourful_dp(const WalkMetricProvider& provider, Vertex s, const Colouring& colouring,
                        SolveOptions opts = {});
TourResult colourful_dp_serial(const WalkMetricProvider& provider, Vertex s,
                               const Colouring& colouring);

struct McConfig {
  double epsilon = 0.01;
  std::uint64_t seed = 0;
};

/// ceil(e^k * ln(ceil(1 / epsilon))), at least 1. Throws InputError unless
/// 0 < epsilon < 1.
std::int64_t mc_iterations(int k, double epsilon);

/// Colouring number `iteration` of the stream for `seed`: vertices 0..n-1
/// in order, each colour uniform in [0, k).
Colouring random_colouring(Vertex n, int k, std::uint64_t seed, std::uint64_t iteration);

struct McReport {
  std::int64_t iterations = 0;
  std::int64_t skipped = 0;  // colourings missing some colour
  std::int64_t best_iteration = -1;
};

/// Monte Carlo colour coding. Sound always; optimal with probability at
/// least 1 - epsilon. Iterations are independent and run in parallel; the
/// minimum arrival wins, ties go to the lowest iteration, so the result is
/// the sequential one.
TourResult solve_k_arbitrary_mc(const WalkMetricProvider& provider, Vertex s, int k,
                                const McConfig& cfg, SolveOptions opts = {},
                                McReport* report = nullptr);

struct HashFamily {
  enum class Provenance { VerifiedRandom, External };

  Vertex n = 0;
  int k = 0;
  std::vector<Colouring> functions;
  Provenance provenance = Provenance::External;
  bool certified = false;
};

/// Exhaustive check: every k-subset of [n] is coloured injectively by some member.
bool is_k_perfect(const HashFamily& family);

/// Runs is_k_perfect and records the outcome in `family.certified`.
bool certify(HashFamily& family);

/// Random colourings kept whenever they cover a not yet covered k-subset,
/// until every k-subset is covered; the result is certified. Requires
/// n <= 20 and 1 <= k <= 5.
HashFamily build_verified_family(Vertex n, int k, std::uint64_t seed);

/// Colour coding over every member of a certified k-perfect family; exact.
TourResult solve_k_arbitrary_det(const WalkMetricProvider& provider, Vertex s, int k,
                                 const HashFamily& family, SolveOptions opts = {});

}  // namespace tempex
