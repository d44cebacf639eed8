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

#ifndef MULAT_LATTICE_HPP_
#define MULAT_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mulat/relation.hpp"

namespace mulat {

/// Largest element count accepted by any constructor.
inline constexpr std::size_t kMaxLatticeSize = 4096;

/// A finite bounded lattice stored as an order bit-matrix plus precomputed
/// meet and join tables. Immutable after construction; all semantics are
/// index based and labels are for display only.
class FiniteLattice {
 public:
  std::size_t size() const { return n_; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  bool leq(Elem x, Elem y) const {
    return (order_[x * words_ + (y >> 6)] >> (y & 63)) & 1u;
  }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  bool comparable(Elem x, Elem y) const { return leq(x, y) || leq(y, x); }

  Elem meet(Elem x, Elem y) const { return meet_[x * n_ + y]; }
  Elem join(Elem x, Elem y) const { return join_[x * n_ + y]; }

  /// Folds over the binary tables; the empty meet is top.
  Elem meet_all(std::span<const Elem> xs) const;
  /// The empty join is bottom.
  Elem join_all(std::span<const Elem> xs) const;

  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find(const std::string& label) const;

  /// Rebuilds the order relation as a dense matrix.
  Relation order() const;

  /// Cover pairs (x, y) with x < y and nothing strictly between, sorted by
  /// (x, y).
  std::vector<std::pair<Elem, Elem>> covers() const;

  /// Number of elements below x, x included.
  std::size_t down_count(Elem x) const { return down_count_[x]; }

  void check_index(Elem x) const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_ && a.order_ == b.order_;
  }

 private:
  friend FiniteLattice build_lattice(std::vector<std::string> labels,
                                     const Relation& leq);
  friend FiniteLattice make_lattice_unchecked(std::vector<std::string> labels,
                                              const Relation& leq,
                                              std::vector<Elem> meet,
                                              std::vector<Elem> join);

  FiniteLattice(std::vector<std::string> labels, const Relation& leq);
  void finish_tables();

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> order_;
  std::vector<std::uint64_t> below_;  // column bitsets: bit x of row y set iff x <= y
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint16_t> join_;
  std::vector<std::uint32_t> down_count_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

/// Validates `leq` as a partial order with all binary meets and joins and
/// derives the tables. Throws Error{NotAPartialOrder} or Error{NotALattice}
/// naming the offending elements.
FiniteLattice build_lattice(std::vector<std::string> labels,
                            const Relation& leq);

/// Trusted constructor for builders that know their tables in closed form.
/// Only the dimensions are checked.
FiniteLattice make_lattice_unchecked(std::vector<std::string> labels,
                                     const Relation& leq,
                                     std::vector<Elem> meet,
                                     std::vector<Elem> join);

bool is_modular(const FiniteLattice& lattice);
bool is_distributive(const FiniteLattice& lattice);

/// A witness triple for a failed law, or nothing if the law holds.
struct Triple {
  Elem a, b, c;
};
/// a <= c with a ∨ (b ∧ c) != (a ∨ b) ∧ c.
std::optional<Triple> modularity_violation(const FiniteLattice& lattice);
/// a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c).
std::optional<Triple> distributivity_violation(const FiniteLattice& lattice);

/// Covers of bottom.
std::vector<Elem> atoms(const FiniteLattice& lattice);
/// Proper elements covered by top.
std::vector<Elem> maximal_elements(const FiniteLattice& lattice);

std::vector<Elem> complements_of(const FiniteLattice& lattice, Elem x);

/// The greatest y with x ∧ y = bottom, if the disjoint set has a greatest
/// element. Returns nothing when only several maximal candidates exist.
std::optional<Elem> pseudo_complement(const FiniteLattice& lattice, Elem x);

/// A map between the element sets of two lattices.
struct LatticeHom {
  const FiniteLattice* source = nullptr;
  const FiniteLattice* target = nullptr;
  std::vector<Elem> map;
};

/// Preserves binary joins and bottom. Throws IndexOutOfRange on a malformed
/// map.
bool is_lattice_hom(const LatticeHom& hom);
bool is_injective(const LatticeHom& hom);

}  // namespace mulat

#endif  // MULAT_LATTICE_HPP_
