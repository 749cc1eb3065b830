// Copyright 2026 The qparity Authors
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

namespace qparity {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NonOrthonormalInput : Error {
  using Error::Error;
};

struct SizeLimitExceeded : Error {
  using Error::Error;
};

struct DuplicateEigenvalue : Error {
  using Error::Error;
};

struct InvalidLabelWidth : Error {
  using Error::Error;
};

struct UnnormalizedState : Error {
  using Error::Error;
};

struct NotAPartition : Error {
  using Error::Error;
};

struct InvalidObservable : Error {
  using Error::Error;
};

struct WrongDimension : Error {
  using Error::Error;
};

struct WrongArity : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace qparity
