#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace priestley {

enum class ErrorKind {
  CycleDetected,
  IndexOutOfRange,
  BoundExceeded,
  InvalidArgument,
  NotALattice,
  NotDistributive,
  NotATopology,
  NotT0,
  NotSober,
  IsoFailure,
  FixtureMismatch,
  UnknownRule,
  NotScottOpen,
  ParseError,
  UnsupportedTarget,
};

std::string_view toString(ErrorKind kind);

/// Every failure raised by the library. `witness()` carries the indices that
/// reproduce the failure (a cycle edge, a pair without a join, a
/// non-distributive triple, ...); it is empty when no witness applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<int> witness = {})
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

/// Parse failures remember the 1-based input line (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorKind::ParseError,
              "parse error" + (line ? " at line " + std::to_string(line) : std::string()) + ": " + reason),
        line_(line), reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

/// Size limits for the exhaustive operations.
struct Bounds {
  /// Largest poset/lattice/space that enumeration-based operations accept.
  std::size_t enumeration = 20;
  /// Largest lattice on which the Scott-open and compactness checks
  /// quantify literally over all 2^n subfamilies.
  std::size_t scott = 12;
  /// Sampling horizon for the symbolic frames.
  std::size_t sample = 1000;
};

void requireWithin(std::size_t n, std::size_t bound, std::string_view what);

}  // namespace priestley
