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

#include "mulat/view.hpp"

#include "mulat/error.hpp"

namespace mulat {

SublatticeView::SublatticeView(const FiniteLattice& parent, Elem low,
                               Elem high)
    : SublatticeView(parent, low, high,
                     low == parent.bottom() ? Kind::downset
                     : high == parent.top() ? Kind::upset
                                            : Kind::interval) {}

SublatticeView::SublatticeView(const FiniteLattice& parent, Elem low,
                               Elem high, Kind kind)
    : parent_(&parent), low_(low), high_(high), kind_(kind) {
  parent.check_index(low);
  parent.check_index(high);
  if (!parent.leq(low, high)) {
    throw Error(ErrorCode::PreorderViolation,
                "interval ['" + parent.label(low) + "', '" +
                    parent.label(high) + "'] is empty");
  }
  for (Elem x = 0; x < parent.size(); ++x)
    if (parent.leq(low, x) && parent.leq(x, high)) elements_.push_back(x);
}

SublatticeView SublatticeView::down(Elem b) const {
  if (!contains(b))
    throw Error(ErrorCode::IndexOutOfRange,
                "'" + parent_->label(b) + "' is not in the view");
  return SublatticeView(*parent_, low_, b);
}

SublatticeView SublatticeView::up(Elem b) const {
  if (!contains(b))
    throw Error(ErrorCode::IndexOutOfRange,
                "'" + parent_->label(b) + "' is not in the view");
  return SublatticeView(*parent_, b, high_);
}

FiniteLattice SublatticeView::materialize() const {
  const std::size_t m = elements_.size();
  std::vector<Elem> local(parent_->size(), 0);
  for (Elem i = 0; i < m; ++i) local[elements_[i]] = i;

  std::vector<std::string> labels;
  labels.reserve(m);
  Relation leq(m);
  std::vector<Elem> meet(m * m), join(m * m);
  for (Elem i = 0; i < m; ++i) {
    labels.push_back(parent_->label(elements_[i]));
    for (Elem j = 0; j < m; ++j) {
      const Elem x = elements_[i], y = elements_[j];
      if (parent_->leq(x, y)) leq.set(i, j);
      meet[i * m + j] = local[parent_->meet(x, y)];
      join[i * m + j] = local[parent_->join(x, y)];
    }
  }
  return make_lattice_unchecked(std::move(labels), leq, std::move(meet),
                                std::move(join));
}

SublatticeView whole(const FiniteLattice& lattice) {
  return SublatticeView(lattice, lattice.bottom(), lattice.top(),
                        SublatticeView::Kind::downset);
}

SublatticeView down_view(const FiniteLattice& lattice, Elem b) {
  return SublatticeView(lattice, lattice.bottom(), b, SublatticeView::Kind::downset);
}

SublatticeView up_view(const FiniteLattice& lattice, Elem b) {
  return SublatticeView(lattice, b, lattice.top(), SublatticeView::Kind::upset);
}

}  // namespace mulat
