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

#include "madj/matroid_io.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "madj/catalogue.h"

namespace madj {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& field, const std::string& what) {
  throw MatroidFormatError("field '" + field + "': " + what);
}

const Json& Field(const Json& object, const std::string& field) {
  auto it = object.find(field);
  if (it == object.end()) Fail(field, "missing");
  return *it;
}

long long Integer(const Json& object, const std::string& field, long long lo, long long hi) {
  const Json& v = Field(object, field);
  if (!v.is_number_integer()) Fail(field, "expected an integer");
  const long long x = v.get<long long>();
  if (x < lo || x > hi) {
    Fail(field, std::to_string(x) + " is outside [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
  }
  return x;
}

std::vector<std::vector<long long>> IntegerRows(const Json& object, const std::string& field) {
  const Json& v = Field(object, field);
  if (!v.is_array()) Fail(field, "expected an array of arrays");
  std::vector<std::vector<long long>> rows;
  for (size_t i = 0; i < v.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) Fail(where, "expected an array");
    std::vector<long long> row;
    for (const Json& x : v[i]) {
      if (!x.is_number_integer()) Fail(where, "expected integers");
      row.push_back(x.get<long long>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> Names(const Json& object, int m) {
  auto it = object.find("names");
  if (it == object.end()) return {};
  if (!it->is_array() || static_cast<int>(it->size()) != m) {
    Fail("names", "expected " + std::to_string(m) + " strings");
  }
  std::vector<std::string> names;
  for (const Json& x : *it) {
    if (!x.is_string()) Fail("names", "expected strings");
    names.push_back(x.get<std::string>());
  }
  return names;
}

int LineOf(const std::string& text, size_t byte) {
  const size_t end = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + end, '\n'));
}

}  // namespace

Matroid ParseMatroidFile(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MatroidFormatError("line " + std::to_string(LineOf(text, e.byte)) +
                             ": malformed JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) throw MatroidFormatError("line 1: expected a JSON object");
  const Json& kind = Field(doc, "kind");
  if (!kind.is_string()) Fail("kind", "expected a string");

  if (kind == "fixture") {
    const Json& name = Field(doc, "name");
    if (!name.is_string()) Fail("name", "expected a string");
    return ResolveFixture(name.get<std::string>());
  }
  if (kind == "linear") {
    const int p = static_cast<int>(Integer(doc, "p", 2, kMaxPrime));
    const int rows = static_cast<int>(Integer(doc, "rows", 0, 1 << 16));
    const int cols = static_cast<int>(Integer(doc, "cols", 0, kMaxGroundSize));
    const std::vector<std::vector<long long>> columns = IntegerRows(doc, "columns");
    if (static_cast<int>(columns.size()) != cols) {
      Fail("columns", "has " + std::to_string(columns.size()) + " columns, cols is " +
                          std::to_string(cols));
    }
    for (size_t c = 0; c < columns.size(); ++c) {
      if (static_cast<int>(columns[c].size()) != rows) {
        Fail("columns[" + std::to_string(c) + "]", "expected " + std::to_string(rows) +
                                                       " entries");
      }
    }
    std::optional<PrimeModulus> modulus;
    try {
      modulus.emplace(p);
    } catch (const std::invalid_argument&) {
      Fail("p", std::to_string(p) + " is not prime");
    }
    return Matroid::FromMatrix(FieldMatrix::FromColumns(*modulus, rows, columns),
                               Names(doc, cols));
  }
  if (kind == "bases") {
    const int m = static_cast<int>(Integer(doc, "m", 0, kMaxGroundSize));
    const int rank = static_cast<int>(Integer(doc, "rank", 0, m));
    std::vector<SubsetMask> bases;
    for (const std::vector<long long>& list : IntegerRows(doc, "bases")) {
      SubsetMask b;
      for (long long e : list) {
        if (e < 0 || e >= m) Fail("bases", "element " + std::to_string(e) + " is out of range");
        if (b.Contains(static_cast<int>(e))) Fail("bases", "repeated element");
        b = b.With(static_cast<int>(e));
      }
      if (b.size() != rank) Fail("bases", ToElementList(b) + " does not have size rank");
      bases.push_back(b);
    }
    return Matroid::FromBases(m, bases, Names(doc, m));
  }
  Fail("kind", "expected \"linear\", \"bases\" or \"fixture\"");
}

std::string SerializeMatroid(const Matroid& m) {
  Json doc;
  if (m.is_linear()) {
    const FieldMatrix& a = m.matrix();
    doc["kind"] = "linear";
    doc["p"] = a.modulus().value();
    doc["rows"] = a.rows();
    doc["cols"] = a.cols();
    Json columns = Json::array();
    for (int c = 0; c < a.cols(); ++c) {
      Json column = Json::array();
      for (int r = 0; r < a.rows(); ++r) column.push_back(static_cast<int>(a.at(r, c)));
      columns.push_back(std::move(column));
    }
    doc["columns"] = std::move(columns);
  } else {
    doc["kind"] = "bases";
    doc["m"] = m.size();
    doc["rank"] = m.rank();
    Json bases = Json::array();
    for (SubsetMask b : m.basis_list()) bases.push_back(b.Elements());
    doc["bases"] = std::move(bases);
  }
  if (!m.names().empty()) doc["names"] = m.names();
  return doc.dump();
}

Matroid LoadMatroid(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    std::stringstream text;
    text << in.rdbuf();
    return ParseMatroidFile(text.str());
  }
  return ResolveFixture(source);
}

}  // namespace madj
