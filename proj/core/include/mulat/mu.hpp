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

#ifndef MULAT_MU_HPP_
#define MULAT_MU_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mulat/builders.hpp"
#include "mulat/lattice.hpp"
#include "mulat/quantale.hpp"
#include "mulat/view.hpp"

namespace mulat {

// Every predicate below is evaluated relative to a view: "0" is the view's
// bottom and meets are taken in the parent. The FiniteLattice overloads use
// the whole lattice. Negative verdicts come with a witness that re-verifies
// under the same predicate.

using ElemPair = std::pair<Elem, Elem>;

/// A nonzero y with x ∧ y = 0, if any.
std::optional<Elem> essential_witness(const SublatticeView& view, Elem x);
bool is_essential(const SublatticeView& view, Elem x);
bool is_essential(const FiniteLattice& lattice, Elem x);

/// y, z with y ∧ z ≠ 0, x ∧ y ≠ 0, x ∧ z ≠ 0 and x ∧ y ∧ z = 0, if any.
/// Pairwise criterion; equivalent to the condition over all finite families.
std::optional<ElemPair> mu_witness(const SublatticeView& view, Elem x);
bool is_mu(const SublatticeView& view, Elem x);
bool is_mu(const FiniteLattice& lattice, Elem x);

/// The family form: every nonempty family y1..yk (2 <= k <= max_family) with
/// nonzero meet that each meets x nontrivially also meets x nontrivially.
/// Exponential; only a cross-check for the pairwise form.
bool is_mu_by_families(const SublatticeView& view, Elem x, int max_family);

/// x ⩽_μ b↓: x <= b and x is a μ-element of b↓. Throws PreorderViolation if
/// x is not below b.
bool mu_in_down(const FiniteLattice& lattice, Elem b, Elem x);
/// x ⩽_μ b↑ in a frame. Throws NotAFrame or PreorderViolation.
bool mu_in_up(const Quantale& frame, Elem b, Elem x);

/// Nonzero y, z <= x with y ∧ z = 0, if any.
std::optional<ElemPair> irreducible_witness(const SublatticeView& view, Elem x);
bool is_irreducible(const SublatticeView& view, Elem x);
bool is_irreducible(const FiniteLattice& lattice, Elem x);

std::vector<Elem> mu_elements(const SublatticeView& view);
std::vector<Elem> mu_elements(const FiniteLattice& lattice);

/// Join of the atoms; bottom when there are none.
Elem socle(const FiniteLattice& lattice);

/// Each member meets the join of the others in 0. Throws EmptySet.
bool is_independent(const SublatticeView& view, std::span<const Elem> set);
bool is_independent(const FiniteLattice& lattice, std::span<const Elem> set);

/// All y with x ∧ y = 0 and x ∨ y a μ-element of the view.
std::vector<Elem> mu_complements(const SublatticeView& view, Elem x);
std::vector<Elem> mu_complements(const FiniteLattice& lattice, Elem x);

/// In a modular lattice with x ∧ y = 0, a maximal y' with x <= y' and
/// y ∧ y' = 0 (lowest index among the maximal ones); y ∨ y' is then μ.
/// Throws NotModular, MeetNotZero, or PostconditionFailed.
Elem mu_complement_containing(const FiniteLattice& lattice, Elem x, Elem y);

/// Some b > x with x essential in b↓, if any.
std::optional<Elem> essentially_closed_witness(const SublatticeView& view, Elem x);
bool is_essentially_closed(const SublatticeView& view, Elem x);
bool is_essentially_closed(const FiniteLattice& lattice, Elem x);

/// Some b > x with x ⩽_μ b↓, if any.
std::optional<Elem> mu_closed_witness(const SublatticeView& view, Elem x);
bool is_mu_closed(const SublatticeView& view, Elem x);
bool is_mu_closed(const FiniteLattice& lattice, Elem x);

struct FastVerdict {
  bool essential = false;
  bool mu = false;
  friend bool operator==(const FastVerdict&, const FastVerdict&) = default;
};

/// Closed form for ideals of R/(p1^m1...pk^mk): essential iff every
/// exponent is below its bound; μ iff there are no i ≠ j with both exponents
/// below their bounds together with some s at its bound. Throws
/// ExponentOutOfRange.
FastVerdict fast_mu_exponent(const FactoredModulus& modulus,
                             std::span<const int> exponents);

/// Opens: essential iff dense; μ iff dense or irreducible as a subspace.
/// Throws NotAnOpen.
FastVerdict fast_mu_topology(const TopologySpec& spec, PointSet open);

/// Modular lattices: μ iff essential or irreducible. Throws NotModular.
bool fast_mu_modular(const FiniteLattice& lattice, Elem x);

/// κ_a(x) = x ∨ a, landing in the up-set a↑ of a frame.
struct KappaMap {
  SublatticeView codomain;
  std::vector<Elem> image;
};
KappaMap kappa(const Quantale& frame, Elem a);

/// All c maximal with a <= c and b ∧ c = 0, where b is the pseudo-complement
/// of a in a frame. Each satisfies a ⩽_μ c↓. Throws NotAFrame,
/// NotPseudoComplement, PostconditionFailed.
std::vector<Elem> maximal_above_disjoint(const Quantale& frame, Elem a, Elem b);

/// Per-element summary. Every false verdict carries its witness; for a
/// non-atom the witness is an element strictly between bottom and x, or x
/// itself when x is bottom.
struct MuReport {
  Elem element = 0;
  bool essential = false;
  bool mu = false;
  bool irreducible = false;
  bool atom = false;
  std::optional<Elem> essential_witness;
  std::optional<ElemPair> mu_witness;
  std::optional<ElemPair> irreducible_witness;
  std::optional<Elem> atom_witness;
};

MuReport analyze_element(const SublatticeView& view, Elem x);
MuReport analyze_element(const FiniteLattice& lattice, Elem x);

/// Reports for every element in index order. Work is split across
/// `threads` workers; the result does not depend on the split.
std::vector<MuReport> analyze_all(const FiniteLattice& lattice, unsigned threads = 1);

}  // namespace mulat

#endif  // MULAT_MU_HPP_
