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

#ifndef MULAT_QUANTALE_HPP_
#define MULAT_QUANTALE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "mulat/lattice.hpp"

namespace mulat {

/// A finite integral commutative quantale: a lattice with a commutative,
/// associative multiplication that distributes over joins and has top as
/// identity. The multiplication need not lie below the meet; when it equals
/// the meet the quantale is a frame.
class Quantale {
 public:
  const FiniteLattice& lattice() const { return lattice_; }
  std::size_t size() const { return lattice_.size(); }

  Elem mult(Elem x, Elem y) const { return mult_[x * lattice_.size() + y]; }
  std::span<const Elem> mult_table() const { return mult_; }

  bool is_frame() const { return frame_; }

 private:
  friend Quantale build_quantale(FiniteLattice lattice, std::vector<Elem> mult);
  friend Quantale make_quantale_unchecked(FiniteLattice lattice,
                                          std::vector<Elem> mult);

  Quantale(FiniteLattice lattice, std::vector<Elem> mult);

  FiniteLattice lattice_;
  std::vector<Elem> mult_;
  bool frame_ = false;
};

/// Validates the multiplication exhaustively. Distributivity over arbitrary
/// joins is checked as binary distributivity plus x·0 = 0. Errors name a
/// witness: NotCommutative, NotAssociative, IdentityViolation,
/// NotJoinDistributive.
Quantale build_quantale(FiniteLattice lattice, std::vector<Elem> mult);

/// For builders whose multiplication is correct by construction.
Quantale make_quantale_unchecked(FiniteLattice lattice, std::vector<Elem> mult);

/// The frame with multiplication = meet. Throws NotDistributive.
Quantale frame_from(FiniteLattice lattice);

/// a⊥ = ⋁{x | x·a = 0}.
Elem annihilator(const Quantale& q, Elem a);
/// a⊥⊥ = a.
bool is_regular(const Quantale& q, Elem a);

/// No zero divisors: x·y = 0 implies x = 0 or y = 0.
bool is_domain(const Quantale& q);
/// Exactly one maximal element.
bool is_local(const FiniteLattice& lattice);

struct QuantaleHom {
  const Quantale* source = nullptr;
  const Quantale* target = nullptr;
  std::vector<Elem> map;

  LatticeHom lattice_hom() const {
    return LatticeHom{&source->lattice(), &target->lattice(), map};
  }
};

/// Preserves joins (binary and empty), multiplication and the unit.
bool is_quantale_hom(const QuantaleHom& hom);

/// Every injective quantale homomorphism source -> target, in lexicographic
/// order of the map. `budget` caps the number of search nodes; exceeding it
/// throws SearchBudgetExceeded.
std::vector<QuantaleHom> find_injective_homs(const Quantale& source,
                                             const Quantale& target,
                                             std::size_t budget = 1'000'000);

/// Lattice isomorphism that also carries one multiplication onto the other.
bool are_isomorphic(const Quantale& a, const Quantale& b);

}  // namespace mulat

#endif  // MULAT_QUANTALE_HPP_
