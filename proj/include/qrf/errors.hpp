// Copyright 2026 The qrframes Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QRF_ERRORS_HPP
#define QRF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qrf {

// Shape mismatch or non-square input where squareness is required.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input expected to be Hermitian beyond the stated tolerance.
class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input expected to be positive semidefinite beyond the PSD tolerance.
class NotPsdError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Kraus family whose completeness sum deviates from the identity.
class UnitalityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Complete-positivity failure when reconstructing a channel.
class PositivityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller-facing mathematical precondition does not hold
// (e.g. a bound evaluator fed a non-covariant channel).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameter outside the range on which a quantity is defined.
class RangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Internal numerical consistency failure (rank deficits, projection gaps).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A CLI spec string failed to parse; `field` names the offending part.
class SpecParseError : public std::invalid_argument {
 public:
  SpecParseError(std::string field_name, const std::string& message)
      : std::invalid_argument(message), field(std::move(field_name)) {}
  std::string field;
};

}  // namespace qrf

#endif  // QRF_ERRORS_HPP
