#pragma once

#include <stdexcept>
#include <string>

namespace heckelab {

// Invalid mathematical input (division by zero, singular matrix, ...).
using domain_error = std::domain_error;

// A computation exceeded the configured operation cap.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An s-power that should have been even (or a specialization request on
// a non-specializable coefficient) was encountered.
struct normalization_error : std::runtime_error {
  explicit normalization_error(const std::string& what) : std::runtime_error(what) {}
};

struct coefficient_error : std::runtime_error {
  explicit coefficient_error(const std::string& what) : std::runtime_error(what) {}
};

// Input violated a checked invariance hypothesis.
struct invariance_error : std::runtime_error {
  explicit invariance_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural identity the theory guarantees failed to hold; indicates a bug.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace heckelab
