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

namespace efa {

/// Command-line entry point. Exit codes: 0 success, 1 usage, 2 configuration,
/// 3 computation, 4 verification failure.
int run_cli(int argc, const char* const* argv);

} // namespace efa
