/*
 *   Copyright 2026 The semiring-lab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "semiring_lab/semiring.hpp"

namespace semiring_lab {

/// Semiring file format: JSON object with keys name, elements, zero, add,
/// mul. Tables are n x n arrays of element names, indexed in `elements`
/// order.
inline RawTables parse_semiring_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw format_error(std::string("semiring file is not valid JSON: ") + e.what());
  }
  RawTables raw;
  try {
    raw.name = doc.at("name").get<std::string>();
    raw.elements = doc.at("elements").get<std::vector<std::string>>();
    raw.zero = doc.at("zero").get<std::string>();
    raw.add = doc.at("add").get<std::vector<std::vector<std::string>>>();
    raw.mul = doc.at("mul").get<std::vector<std::vector<std::string>>>();
  } catch (const nlohmann::json::exception& e) {
    throw format_error(std::string("semiring file has a bad shape: ") + e.what());
  }
  return raw;
}

/// Canonical serialization: fixed key order, 2-space indent, trailing
/// newline. parse -> serialize is byte-stable on files in this form.
inline std::string serialize_semiring(const FiniteSemiring& s) {
  nlohmann::ordered_json doc;
  doc["name"] = s.name;
  doc["elements"] = s.elem_names;
  doc["zero"] = s.elem_names[s.zero];
  auto dump_table = [&](const std::vector<std::vector<int>>& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (int v : row) r.push_back(s.elem_names[v]);
      rows.push_back(std::move(r));
    }
    return rows;
  };
  doc["add"] = dump_table(s.add);
  doc["mul"] = dump_table(s.mul);
  return doc.dump(2) + "\n";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw format_error("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw format_error("cannot write file '" + path + "'");
  out << content;
}

/// Resolves an algebra argument: "builtin:NAME" or a path to a semiring
/// file. Throws format_error / axiom_error on anything unusable.
inline FiniteSemiring load_algebra(const std::string& spec) {
  constexpr const char* prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) return builtin(spec.substr(8));
  return make_semiring(parse_semiring_text(read_file(spec)));
}

} // namespace semiring_lab
