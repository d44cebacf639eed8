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

#ifndef MULAT_VIEW_HPP_
#define MULAT_VIEW_HPP_

#include <span>
#include <vector>

#include "mulat/lattice.hpp"

namespace mulat {

/// The interval [low, high] of a parent lattice, which is closed under the
/// parent's meet and join. Down-sets b↓ are [bottom, b], up-sets b↑ are
/// [b, top]. Nested views (a down-set of an up-set) are general intervals.
///
/// The view refers to its parent; the parent must outlive it.
class SublatticeView {
 public:
  enum class Kind { downset, upset, interval };

  SublatticeView(const FiniteLattice& parent, Elem low, Elem high);
  SublatticeView(const FiniteLattice& parent, Elem low, Elem high, Kind kind);

  const FiniteLattice& parent() const { return *parent_; }
  Kind kind() const { return kind_; }

  /// The view's own zero and one, as parent indices.
  Elem bottom() const { return low_; }
  Elem top() const { return high_; }

  /// Member elements in ascending parent index order.
  std::span<const Elem> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Elem x) const {
    return parent_->leq(low_, x) && parent_->leq(x, high_);
  }

  Elem meet(Elem x, Elem y) const { return parent_->meet(x, y); }
  Elem join(Elem x, Elem y) const { return parent_->join(x, y); }
  bool leq(Elem x, Elem y) const { return parent_->leq(x, y); }

  /// [low, b] inside this view; b must be a member.
  SublatticeView down(Elem b) const;
  /// [b, high] inside this view; b must be a member.
  SublatticeView up(Elem b) const;

  /// Copies the view out as a standalone lattice whose element i is
  /// elements()[i].
  FiniteLattice materialize() const;

 private:
  const FiniteLattice* parent_;
  Elem low_;
  Elem high_;
  Kind kind_;
  std::vector<Elem> elements_;
};

SublatticeView whole(const FiniteLattice& lattice);
SublatticeView down_view(const FiniteLattice& lattice, Elem b);
SublatticeView up_view(const FiniteLattice& lattice, Elem b);

}  // namespace mulat

#endif  // MULAT_VIEW_HPP_
