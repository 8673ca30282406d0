#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

// Bad user input: unknown algebra, invalid (u, v), malformed labels.
class InvalidInputError : public std::runtime_error {
 public:
  explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable enumeration cap (Weyl group size, simple count) was hit.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration caps. Values come from CLI flags; defaults match the library
// contract (|W| <= 1e6, at most 2000 simples per category).
struct Limits {
  long weyl_max = 1'000'000;
  long simples_max = 2'000;
};

}  // namespace verlinde
