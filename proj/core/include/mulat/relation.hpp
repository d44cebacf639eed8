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

#ifndef MULAT_RELATION_HPP_
#define MULAT_RELATION_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace mulat {

/// Element index inside a finite structure.
using Elem = std::uint32_t;

/// Dense square boolean matrix used for order relations and preorders.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  static Relation identity(std::size_t n);
  /// Builds the relation containing exactly the listed pairs.
  static Relation from_pairs(std::size_t n,
                             const std::vector<std::pair<Elem, Elem>>& pairs);

  std::size_t size() const { return n_; }

  bool operator()(Elem x, Elem y) const { return bits_[x * n_ + y] != 0; }
  void set(Elem x, Elem y, bool value = true) {
    bits_[x * n_ + y] = value ? 1 : 0;
  }

  bool is_reflexive() const;
  bool is_antisymmetric() const;
  bool is_transitive() const;

  /// Reflexive-transitive closure (Warshall).
  Relation closure() const;

  /// All pairs (x, y) with x != y in the relation, in row-major order.
  std::vector<std::pair<Elem, Elem>> strict_pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace mulat

#endif  // MULAT_RELATION_HPP_
