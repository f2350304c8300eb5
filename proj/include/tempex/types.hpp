#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/dynamic_bitset.hpp>

namespace tempex {

/// Vertex ids are 0-based.
using Vertex = std::int32_t;

/// Timesteps are 1-based; the lifetime L covers steps 1..L.
using Time = std::int32_t;

/// Unreachable arrival; compares above every finite timestep.
inline constexpr Time kInfinity = std::numeric_limits<Time>::max();

constexpr bool is_finite(Time t) noexcept { return t != kInfinity; }

/// t + d, saturating at kInfinity.
constexpr Time add_saturating(Time t, Time d) noexcept {
  if (t == kInfinity || d == kInfinity) return kInfinity;
  const std::int64_t sum = static_cast<std::int64_t>(t) + d;
  return sum >= kInfinity ? kInfinity : static_cast<Time>(sum);
}

using VertexSet = boost::dynamic_bitset<>;

enum class Mode { Strict, NonStrict };

inline const char* to_string(Mode m) { return m == Mode::Strict ? "strict" : "nonstrict"; }

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A size bound of a data structure or algorithm was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search hit its enumeration budget.
class BudgetError : public CapacityError {
 public:
  using CapacityError::CapacityError;
};

/// The requested algorithm does not handle this instance class.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Walk reconstruction was asked for an unreachable vertex.
class UnreachableError : public Error {
 public:
  using Error::Error;
};

}  // namespace tempex
