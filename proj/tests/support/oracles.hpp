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

#ifndef MULAT_TESTS_ORACLES_HPP_
#define MULAT_TESTS_ORACLES_HPP_

// Reference implementations used to check the library. They read nothing
// from mulat except the order relation of a lattice, and compute meets,
// joins and every predicate straight from the definitions.

#include <cstdint>
#include <optional>
#include <vector>

#include "mulat/lattice.hpp"

namespace oracle {

using Elem = std::uint32_t;

/// A finite poset given by its order matrix. Meets and joins are found by
/// scanning lower and upper bounds.
class Poset {
 public:
  explicit Poset(std::vector<std::vector<bool>> le);
  static Poset of(const mulat::FiniteLattice& lattice);

  std::size_t size() const { return le_.size(); }
  bool le(Elem x, Elem y) const { return le_[x][y]; }
  std::optional<Elem> glb(Elem x, Elem y) const { return glb_[x][y]; }
  std::optional<Elem> lub(Elem x, Elem y) const { return lub_[x][y]; }
  bool is_lattice() const;
  // Valid only when is_lattice().
  Elem meet(Elem x, Elem y) const { return *glb_[x][y]; }
  Elem join(Elem x, Elem y) const { return *lub_[x][y]; }
  Elem bottom() const;
  Elem top() const;

 private:
  std::vector<std::vector<bool>> le_;
  std::vector<std::vector<std::optional<Elem>>> glb_, lub_;
};

/// Elements of [low, high].
std::vector<Elem> interval(const Poset& p, Elem low, Elem high);

// Predicates relative to the interval [low, high]; "zero" is low.
bool essential(const Poset& p, Elem low, Elem high, Elem x);
/// Family definition: for every nonempty family of elements that each meet x
/// above low and whose meet is above low, that meet also meets x above low.
bool mu(const Poset& p, Elem low, Elem high, Elem x);
bool irreducible(const Poset& p, Elem low, Elem x);

// Whole-lattice forms.
bool essential(const Poset& p, Elem x);
bool mu(const Poset& p, Elem x);
bool irreducible(const Poset& p, Elem x);
bool mu_closed(const Poset& p, Elem x);
bool essentially_closed(const Poset& p, Elem x);
std::optional<Elem> pseudo_complement(const Poset& p, Elem x);
std::vector<Elem> maximal_disjoint(const Poset& p, Elem x);
std::vector<Elem> mu_complements(const Poset& p, Elem x);
bool modular(const Poset& p);
bool distributive(const Poset& p);

// Ideals of Z_n as divisors d | n; (d) ∩ (e) = (lcm), the zero ideal is (n).
namespace zn {
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool essential(std::uint64_t n, std::uint64_t d);
bool mu(std::uint64_t n, std::uint64_t d);
bool irreducible(std::uint64_t n, std::uint64_t d);
}  // namespace zn

// Opens of a finite space as bitmasks; meet is intersection.
namespace opens {
bool dense(const std::vector<std::uint64_t>& family, std::uint64_t u);
bool irreducible(const std::vector<std::uint64_t>& family, std::uint64_t u);
/// μ inside the frame interval [low, high] by the family definition.
bool mu(const std::vector<std::uint64_t>& family, std::uint64_t low,
        std::uint64_t high, std::uint64_t u);
/// Up-closed sets of a preorder on k points given as le[i] = bits above i.
std::vector<std::uint64_t> up_sets(const std::vector<std::uint64_t>& above);
}  // namespace opens

/// Number of isomorphism classes of lattices with exactly n elements, for
/// n = 1..max_size, by brute force over labelled posets and permutation
/// canonical forms.
std::vector<std::size_t> lattice_counts(int max_size);

}  // namespace oracle

#endif  // MULAT_TESTS_ORACLES_HPP_
