//  Copyright 2026 The mulat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef MULAT_CLI_DOCUMENT_HPP_
#define MULAT_CLI_DOCUMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mulat/corpus.hpp"

namespace mulat::cli {

inline constexpr int kDocumentVersion = 1;

/// A lattice or quantale description on disk. Only the fields of the given
/// kind are meaningful:
///   explicit      labels, leq (strict pairs, by label), optional mult
///   powerset      k
///   chain         k
///   zn            n
///   pid-quotient  primes, exponents
///   topology      points, opens (each a list of point names)
///   preorder      points, leq (strict pairs, by point name)
///   product       factors (two documents)
struct LatticeDocument {
  int version = kDocumentVersion;
  std::string kind;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> leq;
  std::optional<std::vector<std::vector<std::string>>> mult;
  std::int64_t k = 0;
  std::uint64_t n = 0;
  std::vector<std::string> primes;
  std::vector<int> exponents;
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> opens;
  std::vector<LatticeDocument> factors;

  friend bool operator==(const LatticeDocument&, const LatticeDocument&) = default;
};

/// Pretty-printed with sorted keys; save(load(save(d))) == save(d).
std::string save(const LatticeDocument& doc);
/// Throws InvalidDocument on malformed text, unknown kinds or versions.
LatticeDocument load(std::string_view text);
LatticeDocument load_file(const std::string& path);
void save_file(const LatticeDocument& doc, const std::string& path);

/// The explicit document of a lattice, with the multiplication table when a
/// quantale is given.
LatticeDocument explicit_document(const FiniteLattice& lattice,
                                  const Quantale* quantale = nullptr);

LatticeDocument zn_document(std::uint64_t n);
LatticeDocument powerset_document(int k);
LatticeDocument chain_document(int k);
/// "x^2 (x+1) (x+2)": whitespace-separated prime tokens, each optionally
/// parenthesized and raised to a power. Throws InvalidDocument.
LatticeDocument pid_document(std::string_view factorization);

/// Builds and validates the structure. Explicit payloads go through
/// build_lattice and, with a table, build_quantale.
Instance instantiate(const LatticeDocument& doc);

}  // namespace mulat::cli

#endif  // MULAT_CLI_DOCUMENT_HPP_
