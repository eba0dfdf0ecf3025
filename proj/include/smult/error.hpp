#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace smult {

enum class ErrorKind {
  DivisionByZero,
  NonInvertibleDenominator,
  InvalidField,
  RingMismatch,
  ArityMismatch,
  NotGraded,
  ResourceLimitExceeded,
  InfiniteLength,
  NotAResolution,
  Inconclusive,
  SerreConditionViolated,
  NotPrimary,
  UnsupportedRing,
  InvalidArgument,
  ParseError,
  Configuration,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Reduction-step cap and resolution length defaults shared by the engine.
/// A value of 0 for max_len means "use the per-ring default".
struct Limits {
  std::uint64_t max_steps = 1'000'000;
  std::size_t max_len = 0;
};

/// Limits in effect for the calling thread.
const Limits& current_limits();

/// RAII override of the calling thread's limits.
class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& limits);
  ~ScopedLimits();
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

}  // namespace smult
