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

#ifndef MULAT_ISOMORPHISM_HPP_
#define MULAT_ISOMORPHISM_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mulat/lattice.hpp"

namespace mulat {

/// Per-element isomorphism invariant: down-set size, up-set size, lower and
/// upper cover degrees and height, packed into one word.
std::vector<std::uint64_t> element_invariants(const FiniteLattice& lattice);

/// Order-independent fingerprint of a lattice. Isomorphic lattices share it.
std::uint64_t invariant_hash(const FiniteLattice& lattice);

/// Backtracking search for an order isomorphism a -> b. When `table_a` and
/// `table_b` are non-empty they are row-major binary operations that the
/// bijection must also carry onto each other (used for multiplications).
std::optional<std::vector<Elem>> find_isomorphism(
    const FiniteLattice& a, const FiniteLattice& b,
    std::span<const Elem> table_a = {}, std::span<const Elem> table_b = {});

inline bool are_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace mulat

#endif  // MULAT_ISOMORPHISM_HPP_
