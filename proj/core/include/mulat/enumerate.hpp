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

#ifndef MULAT_ENUMERATE_HPP_
#define MULAT_ENUMERATE_HPP_

#include <functional>
#include <vector>

#include "mulat/lattice.hpp"

namespace mulat {

inline constexpr int kMaxEnumerationSize = 8;

enum class Dedupe { none, isomorphism };

/// Streams every lattice with 1..max_size elements, sizes ascending. Each
/// isomorphism class appears at least once; with Dedupe::isomorphism exactly
/// once. Element 0 is bottom and element size-1 is top.
///
/// Lattices of size n >= 3 are generated as a naturally labelled poset on the
/// n-2 middle elements with a bottom and top adjoined, keeping those with all
/// meets and joins.
void for_each_lattice(int max_size, Dedupe dedupe,
                      const std::function<void(const FiniteLattice&)>& visit);

std::vector<FiniteLattice> enumerate_lattices(int max_size, Dedupe dedupe);

}  // namespace mulat

#endif  // MULAT_ENUMERATE_HPP_
