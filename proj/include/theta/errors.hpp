#pragma once

#include <stdexcept>
#include <string>

namespace theta {

// Bad inputs: unknown labels, malformed JSON, violated preconditions.
// The CLI maps this to exit code 1.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically infeasible requests: orbit not in the moment-map image,
// empty or ambiguous search results, contradictory ledgers. Exit code 2.
struct MathError : std::runtime_error {
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration size above the configured cap. Exit code 3.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace theta
