#pragma once

#include <stdexcept>
#include <string>

namespace finetree {

// Thrown when an enumeration or tree request exceeds the configured size
// limits (the CLI maps this to its usage/limit exit code).
struct limit_error : std::runtime_error {
  explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by transport when the two families do not share a succession
// system; only count-level equivalence holds across such pairs.
struct unsupported_pair_error : std::runtime_error {
  explicit unsupported_pair_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace finetree
