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

#include "mulat/relation.hpp"

#include "mulat/error.hpp"

namespace mulat {

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (Elem i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Relation Relation::from_pairs(std::size_t n,
                              const std::vector<std::pair<Elem, Elem>>& pairs) {
  Relation r(n);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                      ") outside a relation on " + std::to_string(n) +
                      " elements");
    }
    r.set(x, y);
  }
  return r;
}

bool Relation::is_reflexive() const {
  for (Elem i = 0; i < n_; ++i)
    if (!(*this)(i, i)) return false;
  return true;
}

bool Relation::is_antisymmetric() const {
  for (Elem i = 0; i < n_; ++i)
    for (Elem j = i + 1; j < n_; ++j)
      if ((*this)(i, j) && (*this)(j, i)) return false;
  return true;
}

bool Relation::is_transitive() const {
  for (Elem i = 0; i < n_; ++i)
    for (Elem j = 0; j < n_; ++j) {
      if (!(*this)(i, j)) continue;
      for (Elem k = 0; k < n_; ++k)
        if ((*this)(j, k) && !(*this)(i, k)) return false;
    }
  return true;
}

Relation Relation::closure() const {
  Relation r = *this;
  for (Elem i = 0; i < n_; ++i) r.set(i, i);
  for (Elem k = 0; k < n_; ++k)
    for (Elem i = 0; i < n_; ++i) {
      if (!r(i, k)) continue;
      for (Elem j = 0; j < n_; ++j)
        if (r(k, j)) r.set(i, j);
    }
  return r;
}

std::vector<std::pair<Elem, Elem>> Relation::strict_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem i = 0; i < n_; ++i)
    for (Elem j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j)) out.emplace_back(i, j);
  return out;
}

}  // namespace mulat
