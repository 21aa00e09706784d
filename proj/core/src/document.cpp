// Copyright 2026 The polympo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polympo/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace polympo {

namespace {

using Json = nlohmann::ordered_json;

template <class T>
T field(const Json& j, const char* name) {
  if (!j.contains(name)) throw DocumentError(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace

MpoDocument make_document(const PolynomialSpec& poly, const CoefficientVector& a,
                          const SymbolicMPO& mpo) {
  if (poly.degree() != a.k || mpo.k() != a.k) {
    throw std::invalid_argument("make_document: inconsistent k");
  }
  MpoDocument doc;
  doc.k = a.k;
  for (const auto& alpha : poly.alphas()) doc.alphas.push_back(to_string(alpha));
  doc.beta = to_decimal_string(mpo.beta());
  doc.precision_bits = a.precision_bits;
  for (const auto& v : a.values) doc.a.push_back(to_decimal(v));
  doc.bond_dim = mpo.bond_dim();
  const OperatorFactor& bulk = mpo.bulk();
  doc.bulk.resize(bulk.rows());
  for (std::size_t r = 0; r < bulk.rows(); ++r) {
    for (std::size_t c = 0; c < bulk.cols(); ++c) {
      const OpEntry& e = bulk(r, c);
      doc.bulk[r].push_back({std::string(1, label_symbol(e.op)),
                             e.is_zero() ? std::string("0") : to_decimal(e.weight)});
    }
  }
  for (const auto& res : a.residuals) doc.residuals.push_back(to_decimal(res));
  return doc;
}

std::string to_json(const MpoDocument& doc) {
  Json j;
  j["format_version"] = doc.format_version;
  j["k"] = doc.k;
  j["alphas"] = doc.alphas;
  j["beta"] = doc.beta;
  j["precision_bits"] = doc.precision_bits;
  j["a"] = doc.a;
  j["bond_dim"] = doc.bond_dim;
  Json rows = Json::array();
  for (const auto& row : doc.bulk) {
    Json cells = Json::array();
    for (const auto& e : row) cells.push_back(Json{{"op", e.op}, {"w", e.w}});
    rows.push_back(std::move(cells));
  }
  j["bulk"] = std::move(rows);
  j["residuals"] = doc.residuals;
  return j.dump(2) + '\n';
}

MpoDocument parse_document(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document root must be an object");

  MpoDocument doc;
  doc.format_version = field<std::string>(j, "format_version");
  if (doc.format_version != "1") {
    throw DocumentError("unsupported format_version '" + doc.format_version + "'");
  }
  doc.k = field<int>(j, "k");
  doc.alphas = field<std::vector<std::string>>(j, "alphas");
  doc.beta = field<std::string>(j, "beta");
  doc.precision_bits = field<int>(j, "precision_bits");
  doc.a = field<std::vector<std::string>>(j, "a");
  doc.bond_dim = field<int>(j, "bond_dim");
  doc.residuals = field<std::vector<std::string>>(j, "residuals");

  if (doc.k < 1) throw DocumentError("k must be >= 1");
  if (doc.bond_dim != doc.k + 3) throw DocumentError("bond_dim must equal k + 3");
  if (static_cast<int>(doc.alphas.size()) != doc.k || static_cast<int>(doc.a.size()) != doc.k) {
    throw DocumentError("alphas and a must have k entries");
  }

  if (!j.contains("bulk") || !j["bulk"].is_array()) throw DocumentError("missing field 'bulk'");
  const Json& rows = j["bulk"];
  if (static_cast<int>(rows.size()) != doc.bond_dim) throw DocumentError("bulk must have bond_dim rows");
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != doc.bond_dim) {
      throw DocumentError("bulk rows must have bond_dim entries");
    }
    std::vector<MpoDocument::Entry> cells;
    for (const auto& cell : row) {
      MpoDocument::Entry e{field<std::string>(cell, "op"), field<std::string>(cell, "w")};
      if (e.op.size() != 1 || std::string_view("0IXY").find(e.op[0]) == std::string_view::npos) {
        throw DocumentError("unknown operator label '" + e.op + "'");
      }
      cells.push_back(std::move(e));
    }
    doc.bulk.push_back(std::move(cells));
  }
  return doc;
}

void write_document(const std::filesystem::path& path, const MpoDocument& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DocumentError("cannot open '" + path.string() + "' for writing");
  out << to_json(doc);
  out.flush();
  if (!out) throw DocumentError("write to '" + path.string() + "' failed");
}

MpoDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_document(buffer.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path.string() + ": " + e.what());
  }
}

PolynomialSpec to_polynomial(const MpoDocument& doc) {
  std::vector<Rational> alphas;
  for (const auto& s : doc.alphas) alphas.push_back(parse_rational(s));
  return PolynomialSpec::from_alphas(std::move(alphas), parse_rational(doc.beta));
}

SymbolicMPO to_mpo(const MpoDocument& doc) {
  PrecisionScope scope(doc.precision_bits);
  const auto dim = static_cast<std::size_t>(doc.bond_dim);
  OperatorFactor bulk(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const auto& cell = doc.bulk.at(r).at(c);
      bulk(r, c) = {label_from_symbol(cell.op[0]), parse_real(cell.w)};
    }
  }
  return SymbolicMPO(doc.k, parse_rational(doc.beta), std::move(bulk));
}

}  // namespace polympo
