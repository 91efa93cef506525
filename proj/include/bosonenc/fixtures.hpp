// Copyright 2026 The bosonenc authors
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

#include <string>
#include <vector>

namespace bosonenc::fixtures {

/// Bundled force-field files: "co2" is a four-mode system with a degenerate
/// bend pair, "symmetric2" a two-mode system with exchange symmetry.
std::vector<std::string> names();
const std::string& qff_json(const std::string& name);

/// Resolve a --qff argument: a bundled fixture name or a file path.
std::string load_qff(const std::string& name_or_path);

}  // namespace bosonenc::fixtures
