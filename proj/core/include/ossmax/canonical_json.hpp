// Copyright 2026 The Authors.
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

#ifndef OSSMAX_CANONICAL_JSON_HPP_
#define OSSMAX_CANONICAL_JSON_HPP_

#include <string>

#include <nlohmann/json.hpp>

namespace ossmax {

using Json = nlohmann::json;

// Deterministic serialization: keys sorted, compact separators, doubles
// printed with 17 significant digits so every double round-trips to the same
// bits. Two runs that build equal documents emit identical bytes.
std::string CanonicalDump(const Json& value);

// CanonicalDump plus a trailing newline, written to the given path.
void WriteCanonicalFile(const std::string& path, const Json& value);

Json ParseJsonFile(const std::string& path);

}  // namespace ossmax

#endif  // OSSMAX_CANONICAL_JSON_HPP_
