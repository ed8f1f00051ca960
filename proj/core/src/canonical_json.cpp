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

#include "ossmax/canonical_json.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include "ossmax/errors.hpp"

namespace ossmax {
namespace {

void AppendNumber(double v, std::string* out) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  // Keep float-typed values recognizable as floats on re-parse.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  out->append(s);
}

void Dump(const Json& value, std::string* out) {
  switch (value.type()) {
    case Json::value_t::object: {
      out->push_back('{');
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out->push_back(',');
        first = false;
        out->append(Json(it.key()).dump());
        out->push_back(':');
        Dump(it.value(), out);
      }
      out->push_back('}');
      break;
    }
    case Json::value_t::array: {
      out->push_back('[');
      bool first = true;
      for (const Json& item : value) {
        if (!first) out->push_back(',');
        first = false;
        Dump(item, out);
      }
      out->push_back(']');
      break;
    }
    case Json::value_t::number_float:
      AppendNumber(value.get<double>(), out);
      break;
    default:
      // Integers, booleans, strings and null already have one canonical form.
      out->append(value.dump());
      break;
  }
}

}  // namespace

std::string CanonicalDump(const Json& value) {
  std::string out;
  Dump(value, &out);
  return out;
}

void WriteCanonicalFile(const std::string& path, const Json& value) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open for writing: " + path);
  out << CanonicalDump(value) << "\n";
}

Json ParseJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

}  // namespace ossmax
