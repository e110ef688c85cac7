#pragma once

#include <stdexcept>

namespace menon {

// Malformed textual input: field descriptors, ideal literals, character selectors.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical precondition was violated by the caller: zero ideal where a
// nonzero one is required, division by a non-divisor, non-coprime CRT split, ...
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed the configured work budget or residue-ring bound.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal exactness invariant failed (non-integral reduced character sum,
// inconsistent factorization, non-bijective discrete log).  Indicates a bug in
// this library, never bad input; surfaced loudly instead of being absorbed.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace menon
