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

#ifndef MULAT_SEARCH_HPP_
#define MULAT_SEARCH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mulat/lattice.hpp"

namespace mulat {

/// Boundary queries:
///   mu-not-essential-not-irreducible-nonmodular  x: [x]
///   muclosed-converse                             x, y, b: [x, y, b] where x is
///       the pseudo-complement of y and x ⩽_μ b↓ for some b > x
///   pcmu-maximality                               a, b, c0, c: [a, b, c0, c] where
///       b is the pseudo-complement of a, c0 is maximal above a and disjoint
///       from b, c > c0 and a ⩽_μ c↓
/// The bottom element is never reported for the last two; it is trivially
/// a witness in every nontrivial lattice.
struct SearchWitness {
  std::string predicate;
  FiniteLattice lattice;
  std::vector<Elem> elements;
  std::string detail;
};

struct SearchResult {
  std::optional<SearchWitness> witness;
  std::size_t lattices_scanned = 0;
};

const std::vector<std::string>& search_predicates();

/// Scans enumerate_lattices(max_size) in stream order. Throws UnknownCheckName,
/// SearchBudgetExceeded when max_size > 7.
SearchResult counterexample_search(std::string_view predicate, int max_size);
SearchResult counterexample_search(std::string_view predicate,
                                   std::span<const FiniteLattice> lattices);

/// Re-evaluates the predicate on the witness elements.
bool verify_witness(const SearchWitness& witness);

}  // namespace mulat

#endif  // MULAT_SEARCH_HPP_
