#pragma once

#include <cstdint>
#include <vector>

#include "tempex/graph.hpp"
#include "tempex/tour_dp.hpp"

namespace tempex {

enum class TransitionKind { Free, Restricted, Identical };

const char* to_string(TransitionKind k);

/// How a two-component step turns into the next one.
///
/// Free: all four cross intersections are non-empty. Restricted: exactly
/// one is empty; the step-i component that misses a step-(i+1) component is
/// contained in the other one and grows, the remaining step-i component
/// shrinks to a strict subset. Identical: same set family.
struct TransitionClass {
  TransitionKind kind = TransitionKind::Free;
  std::int32_t shrinking = -1;  // component index in `from`, Restricted only
  std::int32_t growing = -1;
};

/// Both partitions must have exactly two non-empty parts over the same
/// vertex set; otherwise InputError.
TransitionClass classify_transition(const Partition& from, const Partition& to);

/// Which step of the decision cascade settled an instance.
enum class Gamma2Rule {
  NoSteps,              // L = 0: only the start vertex is visited
  SingleComponent,      // some step is one component
  RestrictedAfterFree,  // a restricted transition follows a free one
  ShrinkingStart,       // the forced walk sits in a shrinking component
  ManyFree,             // enough free transitions for the halving walk
  Enumeration,          // all choice vectors through the free suffix
};

const char* to_string(Gamma2Rule r);

struct Gamma2Report {
  Gamma2Rule rule = Gamma2Rule::NoSteps;
  std::int32_t blocks = 0;            // runs of identical consecutive steps
  std::int32_t free_transitions = 0;  // length of the free suffix
  std::int64_t enumerated = 0;        // choice vectors tried
};

/// Polynomial decision procedure for non-strict graphs with at most two
/// components per step, for every target kind. On YES the walk validates,
/// satisfies the target, and stops at the first step where it does; the
/// arrival is that of the certificate, not necessarily the foremost one.
/// Throws CapabilityError when some step has more than two components.
TourResult solve_gamma2(const NonStrictTemporalGraph& g, Vertex s, const TargetSpec& target,
                        Gamma2Report* report = nullptr);

}  // namespace tempex
