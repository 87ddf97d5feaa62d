// io.cc
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

#include "linrep/io.hh"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace linrep {

namespace {

using nlohmann::json;

const json& require_key(const json& j, const std::string& key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(key + ": missing");
  return *it;
}

std::string require_string(const json& value, const std::string& path) {
  if (!value.is_string()) throw ParseError(path + ": expected a string");
  return value.get<std::string>();
}

long long require_integer(const json& value, const std::string& path) {
  if (!value.is_number_integer()) throw ParseError(path + ": expected an integer");
  return value.get<long long>();
}

Rational require_rational(const json& value, const std::string& path) {
  const std::string text = require_string(value, path);
  try {
    return Rational::from_string(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<Rational> require_entry_list(const json& value, std::size_t dim,
                                         const std::string& path) {
  if (!value.is_array()) throw ParseError(path + ": expected an array");
  if (value.size() != dim) {
    throw ParseError(path + ": expected " + std::to_string(dim) +
                     " entries, got " + std::to_string(value.size()));
  }
  std::vector<Rational> out;
  out.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    out.push_back(require_rational(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json entries_to_json(const std::vector<Rational>& entries) {
  json out = json::array();
  for (const Rational& e : entries) out.push_back(e.str());
  return out;
}

}  // namespace

RepresentationDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document: expected a JSON object");

  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "field" && key != "q" && key != "dim" && key != "u" &&
        key != "matrices" && key != "w" && key != "name" && key != "description") {
      throw ParseError("unexpected key \"" + key + "\"");
    }
  }

  if (require_string(require_key(j, "field"), "field") != "Q") {
    throw ParseError("field: expected \"Q\"");
  }

  const long long q = require_integer(require_key(j, "q"), "q");
  if (q < 2) throw ParseError("q: expected an integer >= 2");
  if (q > 1'000'000) throw ParseError("q: too large");

  const long long dim_value = require_integer(require_key(j, "dim"), "dim");
  if (dim_value < 0) throw ParseError("dim: expected a non-negative integer");
  const std::size_t dim = static_cast<std::size_t>(dim_value);

  RowVector entry(require_entry_list(require_key(j, "u"), dim, "u"));

  const json& matrices_json = require_key(j, "matrices");
  if (!matrices_json.is_array()) throw ParseError("matrices: expected an array");
  if (matrices_json.size() != static_cast<std::size_t>(q)) {
    throw ParseError("matrices: expected " + std::to_string(q) +
                     " matrices, got " + std::to_string(matrices_json.size()));
  }
  std::vector<Matrix> matrices;
  matrices.reserve(static_cast<std::size_t>(q));
  for (std::size_t a = 0; a < matrices_json.size(); ++a) {
    const std::string path = "matrices[" + std::to_string(a) + "]";
    const json& rows = matrices_json[a];
    if (!rows.is_array()) throw ParseError(path + ": expected an array");
    if (rows.size() != dim) {
      throw ParseError(path + ": expected " + std::to_string(dim) +
                       " rows, got " + std::to_string(rows.size()));
    }
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const std::vector<Rational> row =
          require_entry_list(rows[r], dim, path + "[" + std::to_string(r) + "]");
      for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = row[c];
    }
    matrices.push_back(std::move(m));
  }

  ColVector exit(require_entry_list(require_key(j, "w"), dim, "w"));

  RepresentationDocument doc{
      LinearRepresentation(static_cast<unsigned>(q), std::move(entry),
                           std::move(matrices), std::move(exit)),
      std::nullopt, std::nullopt};
  if (j.contains("name")) doc.name = require_string(j["name"], "name");
  if (j.contains("description")) {
    doc.description = require_string(j["description"], "description");
  }
  return doc;
}

std::string format_document(const RepresentationDocument& doc) {
  const LinearRepresentation& rep = doc.rep;
  const std::size_t dim = rep.dimension();

  json j;  // nlohmann objects keep keys sorted, which is the canonical order
  j["field"] = "Q";
  j["q"] = rep.alphabet_size();
  j["dim"] = dim;

  std::vector<Rational> u_entries;
  for (std::size_t i = 0; i < dim; ++i) u_entries.push_back(rep.entry().at(i));
  j["u"] = entries_to_json(u_entries);

  json matrices = json::array();
  for (Letter a = 0; a < rep.alphabet_size(); ++a) {
    json rows = json::array();
    for (std::size_t r = 0; r < dim; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < dim; ++c) row.push_back(rep.matrix(a).at(r, c));
      rows.push_back(entries_to_json(row));
    }
    matrices.push_back(std::move(rows));
  }
  j["matrices"] = std::move(matrices);

  std::vector<Rational> w_entries;
  for (std::size_t i = 0; i < dim; ++i) w_entries.push_back(rep.exit().at(i));
  j["w"] = entries_to_json(w_entries);

  if (doc.name) j["name"] = *doc.name;
  if (doc.description) j["description"] = *doc.description;

  // Canonical layout: one top-level key per line (nlohmann objects iterate
  // in sorted key order), nested values in compact form.
  std::string out = "{\n";
  bool first = true;
  for (const auto& item : j.items()) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + json(item.key()).dump() + ": " + item.value().dump();
  }
  out += "\n}\n";
  return out;
}

RepresentationDocument load_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return parse_document(text);
  } catch (const ParseError& e) {
    throw ParseError((path == "-" ? std::string("stdin") : path) + ": " + e.what());
  }
}

void save_document(const RepresentationDocument& doc, const std::string& path) {
  const std::string text = format_document(doc);
  if (path == "-") {
    std::cout << text;
    if (!std::cout) throw std::runtime_error("cannot write to stdout");
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace linrep
