#pragma once

#include <stdexcept>
#include <string>

namespace ucz {

/// Operands live in ambient spaces of different dimension.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A pair of subspaces is not a direct-sum decomposition of the ambient space.
struct DecompositionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input violates an operation's precondition (not in f + b, not nilpotent, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Requested type, rank or feature is not available for this algebra.
struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An internal solve that must succeed for valid Cartan data did not.
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The logarithmic form was evaluated on its polar divisor.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace ucz
