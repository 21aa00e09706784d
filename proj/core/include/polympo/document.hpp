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

#ifndef POLYMPO_DOCUMENT_HPP
#define POLYMPO_DOCUMENT_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polympo/mpo.hpp"
#include "polympo/polynomial.hpp"
#include "polympo/solver.hpp"

namespace polympo {

/// Portable serialization of a built MPO. All numbers that carry working
/// precision are decimal strings; field order is fixed.
///
///   format_version  "1"
///   k               polynomial degree
///   alphas          ["a1", ..., "ak"], rationals ("3", "1/2")
///   beta            decimal string
///   precision_bits  working precision of a, weights and residuals
///   a               ascending a_1..a_k of the normalized profile
///   bond_dim        k + 3
///   bulk            (k+3) x (k+3) rows of {"op": "0"|"I"|"X"|"Y", "w": "..."}
///   residuals       relative eta residuals, m = 1..k
struct MpoDocument {
  struct Entry {
    std::string op;
    std::string w;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::string format_version = "1";
  int k = 0;
  std::vector<std::string> alphas;
  std::string beta;
  int precision_bits = 0;
  std::vector<std::string> a;
  int bond_dim = 0;
  std::vector<std::vector<Entry>> bulk;
  std::vector<std::string> residuals;

  friend bool operator==(const MpoDocument&, const MpoDocument&) = default;
};

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MpoDocument make_document(const PolynomialSpec& poly, const CoefficientVector& a,
                          const SymbolicMPO& mpo);

/// UTF-8 JSON text, two-space indent, trailing newline.
std::string to_json(const MpoDocument& doc);

/// Parses and validates structure (field presence, bond_dim = k+3, labels).
MpoDocument parse_document(std::string_view json_text);

void write_document(const std::filesystem::path& path, const MpoDocument& doc);
MpoDocument read_document(const std::filesystem::path& path);

/// Rebuilds the symbolic MPO at the document's precision.
SymbolicMPO to_mpo(const MpoDocument& doc);
PolynomialSpec to_polynomial(const MpoDocument& doc);

}  // namespace polympo

#endif  // POLYMPO_DOCUMENT_HPP
