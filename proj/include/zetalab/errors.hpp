#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

// Zero base with negative exponent, parameters outside their domain, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation requested exactly at a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Requested point lies at or below the validity floor of the current truncation.
class InsufficientDepthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exponent ladders of two series are not an integer apart.
class LadderMisalignmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Perturbation parameters violate a guard (|eps| >= 1, c < 0, gap condition).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Principal symbol not invertible.
class EllipticityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An order-by-order solve left the representable coefficient family.
class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Symbol truncation does not reach the degree an operation needs.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zetalab
