#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace rstep {

using Vertex = std::uint32_t;
using Weight = std::uint64_t;

/// Distance value used for "not reached" and for an unbounded radius.
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();
inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

/// Addition that sticks at kInfinity instead of wrapping.
constexpr Weight saturating_add(Weight a, Weight b) noexcept {
  return (a > kInfinity - b) ? kInfinity : a + b;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or radii text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input is well formed but violates a domain rule (zero weight, empty graph, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A brute-force oracle was asked to run above its vertex cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Caps for the exhaustive oracles. These are configuration, not constants.
struct OracleLimits {
  std::size_t max_vertices = 400;
};

}  // namespace rstep
