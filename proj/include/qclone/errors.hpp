// Copyright 2026 The qclone Authors
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

namespace qclone {

/// Invalid scalar parameter: qudit dimension below 2, root not coprime with
/// the sequence length, control level out of range, and similar.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& message)
      : std::invalid_argument(message) {}
};

/// Operand shapes or wire references that do not line up.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& message)
      : std::invalid_argument(message) {}
};

/// A dense object would exceed the configured size cap.
class SizeCapError : public std::runtime_error {
 public:
  explicit SizeCapError(const std::string& message)
      : std::runtime_error(message) {}
};

/// An operator lacks a structural property the construction relies on
/// (unitarity, P^d == I).
class StructureError : public std::invalid_argument {
 public:
  explicit StructureError(const std::string& message)
      : std::invalid_argument(message) {}
};

}  // namespace qclone
