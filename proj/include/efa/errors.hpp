// SPDX-License-Identifier: Apache-2.0
//
// efa-relay: energy-flow-assisted amplify-and-forward relay optimization
// Copyright (C) 2026 The efa-relay authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>

namespace efa {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical kernels
struct NotPositiveDefinite : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };

// Physical model
struct DomainError : Error { using Error::Error; };
struct DegenerateChannel : Error { using Error::Error; };
struct ConstraintViolated : Error { using Error::Error; };

// Configuration and I/O
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace efa
