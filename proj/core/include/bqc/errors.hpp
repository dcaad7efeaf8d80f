// Copyright 2026 The bqclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace bqc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad index, size mismatch, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configuration or input file failed validation. The message names the
/// offending field.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A register or matrix would exceed the dense-simulation bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A message or protocol step arrived in an order the protocol forbids.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Indicates a bug, not bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A forced measurement outcome has (numerically) zero probability.
class ImpossibleBranch : public Error {
 public:
  using Error::Error;
};

}  // namespace bqc
