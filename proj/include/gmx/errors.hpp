// Copyright (c) the gmxc Authors. All rights reserved.
//
// Use of this source code is governed by the Apache-2.0 license
// that can be found in the LICENSE file.

#ifndef GMX_ERRORS_H_
#define GMX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gmx {

// Base class for all codec errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor/feature geometry does not satisfy an operation's contract.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// A symbol lies outside the coding alphabet [-255, 256].
class AlphabetRangeError : public Error {
 public:
  using Error::Error;
};

// A numeric argument violates a domain precondition (p <= 0, rate < 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Non-finite values where finite ones are required.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A distribution with no mass anywhere.
class DegenerateDistributionError : public Error {
 public:
  using Error::Error;
};

// An operation received an empty tensor.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// A symbol cannot be represented by its CDF table (zero width).
class CodingError : public Error {
 public:
  using Error::Error;
};

// The coded payload ended before all symbols were decoded.
class StreamExhaustedError : public Error {
 public:
  using Error::Error;
};

// Checksum mismatch or structurally invalid bitstream/weight binding.
class CorruptStreamError : public Error {
 public:
  using Error::Error;
};

// Malformed file: bad magic, truncated header, inconsistent manifest.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace gmx

#endif  // GMX_ERRORS_H_
