// Copyright 2026 The dialforge Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dialforge {

// Precondition broken by the caller (bad rating, US as a transform target,
// unknown baseline strategy). Never retried.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Input file or reply text that does not follow its format. Carries the
// 1-based line number when the input is line-oriented (0 otherwise).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")"
                                : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input whose values violate a domain invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A prompt template rendered with missing or unknown bindings.
class RenderError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Turn-structured text that cannot be read as a dialog.
class FormatError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Gateway failures. TransientError is retried, AuthError never is, and
// TransportError is what the caller sees once retries are exhausted.
class GatewayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class TransientError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};
class AuthError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};
class TransportError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};

// A pipeline stage was asked to run before the stage it depends on.
class DependencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dialforge
