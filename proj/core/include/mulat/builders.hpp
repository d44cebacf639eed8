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

#ifndef MULAT_BUILDERS_HPP_
#define MULAT_BUILDERS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mulat/lattice.hpp"
#include "mulat/quantale.hpp"

namespace mulat {

/// p1^m1 · ... · pk^mk with display names for the primes. Primes may be
/// integers ("2", "3") or ring elements of any PID ("x", "x+1").
struct FactoredModulus {
  std::vector<std::string> primes;
  std::vector<int> exponents;

  /// Factorizes an integer n >= 2 by trial division.
  static FactoredModulus of_integer(std::uint64_t n);

  std::size_t ideal_count() const;
  /// The integer value when every prime label is a decimal integer.
  std::optional<std::uint64_t> integer_value() const;

  /// Throws InvalidModulus unless k >= 1, every exponent >= 1 and the primes
  /// are pairwise distinct.
  void validate() const;

  friend bool operator==(const FactoredModulus&, const FactoredModulus&) = default;
};

using ExponentVector = std::vector<int>;

/// The ideal quantale of R/(p1^m1 ... pk^mk) for a PID R. The ideal
/// (p1^e1 ... pk^ek) is stored as its exponent vector e with 0 <= ei <= mi;
/// generators are normalised by gcd with the modulus, so every ideal has one
/// vector. Meet is componentwise max, join componentwise min, product
/// componentwise min(a + b, m). The zero ideal is m, the unit ideal 0.
class ExponentQuantale {
 public:
  const FactoredModulus& modulus() const { return modulus_; }
  const Quantale& quantale() const { return quantale_; }
  const FiniteLattice& lattice() const { return quantale_.lattice(); }
  std::size_t size() const { return exponents_.size(); }

  const ExponentVector& exponents(Elem x) const { return exponents_[x]; }
  /// Throws ExponentOutOfRange for a vector outside the box.
  Elem index_of(std::span<const int> exponents) const;
  /// Index of the ideal generated by the integer l (Z_n only).
  Elem index_of_generator(std::uint64_t l) const;

 private:
  friend ExponentQuantale ideal_quantale(const FactoredModulus& modulus);
  ExponentQuantale(FactoredModulus modulus, Quantale quantale,
                   std::vector<ExponentVector> exponents);

  FactoredModulus modulus_;
  Quantale quantale_;
  std::vector<ExponentVector> exponents_;
};

/// Element indices follow the mixed-radix order of exponent vectors, first
/// prime least significant. Throws SizeLimitExceeded beyond kMaxLatticeSize
/// ideals.
ExponentQuantale ideal_quantale(const FactoredModulus& modulus);
/// Ideals of Z_n, labelled "(d)" by the divisor generating them.
ExponentQuantale zn_ideals(std::uint64_t n);

/// A set of points of a finite space, bit i standing for point i.
using PointSet = std::uint64_t;

struct TopologySpec {
  std::vector<std::string> points;
  std::vector<PointSet> opens;

  PointSet full() const {
    return points.size() == 64 ? ~PointSet{0}
                               : (PointSet{1} << points.size()) - 1;
  }
  /// Throws NotATopology naming the first violation.
  void validate() const;
};

/// Opens in frame element order: by cardinality, then by bitmask.
std::vector<PointSet> canonical_opens(const TopologySpec& spec);
/// Frame element of an open; throws NotAnOpen.
Elem open_index(const TopologySpec& spec, PointSet open);
std::string point_set_label(const TopologySpec& spec, PointSet set);

/// Frame of opens ordered by inclusion.
Quantale topology_frame(const TopologySpec& spec);

struct AlexandrovFrame {
  Quantale frame;
  TopologySpec topology;
};

/// Opens are the up-closed sets of the preorder. At most 5 points.
AlexandrovFrame alexandrov_frame(const Relation& preorder,
                                 std::vector<std::string> point_names = {});

/// Boolean frame on the subsets of {1..k}, element index = bitmask.
/// 1 <= k <= 12.
Quantale powerset_frame(int k);
/// Total order 0 < 1 < ... < k-1 as a frame.
Quantale chain(int k);
/// Componentwise order on pairs; element (i, j) has index i * |b| + j.
FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);

/// Diamond: 0, three pairwise incomparable atoms a b c, 1.
FiniteLattice m3();
/// Pentagon: 0 < a < c < 1 and 0 < b < 1.
FiniteLattice n5();

}  // namespace mulat

#endif  // MULAT_BUILDERS_HPP_
