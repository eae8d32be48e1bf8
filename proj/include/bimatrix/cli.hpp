// Copyright 2026 The Bimatrix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bimatrix {

/// Batch front end. `args` excludes the program name. A successful run
/// writes exactly one JSON document to `out` and returns 0. Bad input
/// (missing file, parse error, unknown concept, exceeded budget) writes a
/// JSON error object {error, detail, location?} to `err` and returns 1;
/// internal invariant violations return 2. Output is byte-identical across
/// repeated runs on the same input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bimatrix
