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

#include "mulat/lattice.hpp"

#include <bit>
#include <string>

#include "mulat/error.hpp"

namespace mulat {

namespace {

std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b,
                         std::size_t words) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

std::string quoted(const std::vector<std::string>& labels, Elem x) {
  return "'" + labels[x] + "'";
}

}  // namespace

FiniteLattice::FiniteLattice(std::vector<std::string> labels,
                             const Relation& leq)
    : n_(leq.size()),
      words_((leq.size() + 63) / 64),
      labels_(std::move(labels)),
      order_(n_ * words_, 0),
      below_(n_ * words_, 0),
      down_count_(n_, 0) {
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      if (leq(x, y)) {
        order_[x * words_ + (y >> 6)] |= std::uint64_t{1} << (y & 63);
        below_[y * words_ + (x >> 6)] |= std::uint64_t{1} << (x & 63);
        ++down_count_[y];
      }
}

void FiniteLattice::finish_tables() {
  for (Elem x = 0; x < n_; ++x) {
    if (down_count_[x] == 1) bottom_ = x;
    if (down_count_[x] == n_) top_ = x;
  }
}

Elem FiniteLattice::meet_all(std::span<const Elem> xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

Elem FiniteLattice::join_all(std::span<const Elem> xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

std::optional<Elem> FiniteLattice::find(const std::string& label) const {
  for (Elem x = 0; x < n_; ++x)
    if (labels_[x] == label) return x;
  return std::nullopt;
}

Relation FiniteLattice::order() const {
  Relation r(n_);
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      if (leq(x, y)) r.set(x, y);
  return r;
}

std::vector<std::pair<Elem, Elem>> FiniteLattice::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) {
      if (!lt(x, y)) continue;
      // The interval [x, y] has exactly two elements.
      if (popcount_and(&order_[x * words_], &below_[y * words_], words_) == 2)
        out.emplace_back(x, y);
    }
  return out;
}

void FiniteLattice::check_index(Elem x) const {
  if (x >= n_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "element " + std::to_string(x) + " in a lattice of size " +
                    std::to_string(n_));
  }
}

FiniteLattice build_lattice(std::vector<std::string> labels,
                            const Relation& leq) {
  const std::size_t n = leq.size();
  if (n == 0) throw Error(ErrorCode::NotALattice, "empty carrier");
  if (n > kMaxLatticeSize) {
    throw Error(ErrorCode::SizeLimitExceeded,
                std::to_string(n) + " elements exceeds the limit of " +
                    std::to_string(kMaxLatticeSize));
  }
  if (labels.size() != n) {
    throw Error(ErrorCode::IndexOutOfRange,
                std::to_string(labels.size()) + " labels for " +
                    std::to_string(n) + " elements");
  }

  for (Elem x = 0; x < n; ++x)
    if (!leq(x, x))
      throw Error(ErrorCode::NotAPartialOrder,
                  "not reflexive at " + quoted(labels, x));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (leq(x, y) && leq(y, x))
        throw Error(ErrorCode::NotAPartialOrder,
                    "not antisymmetric on " + quoted(labels, x) + ", " +
                        quoted(labels, y));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!leq(x, y)) continue;
      for (Elem z = 0; z < n; ++z)
        if (leq(y, z) && !leq(x, z))
          throw Error(ErrorCode::NotAPartialOrder,
                      "not transitive on " + quoted(labels, x) + " <= " +
                          quoted(labels, y) + " <= " + quoted(labels, z));
    }

  FiniteLattice lattice(std::move(labels), leq);
  const std::size_t words = lattice.words_;
  std::vector<std::uint32_t> up_count(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (leq(x, y)) ++up_count[x];

  lattice.meet_.assign(n * n, 0);
  lattice.join_.assign(n * n, 0);
  std::vector<std::uint64_t> bounds(words);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      // Meet: the common lower bound whose down-set is the whole bound set.
      std::size_t lower_count = 0;
      for (std::size_t w = 0; w < words; ++w) {
        bounds[w] = lattice.below_[x * words + w] & lattice.below_[y * words + w];
        lower_count += std::popcount(bounds[w]);
      }
      std::optional<Elem> meet;
      for (std::size_t w = 0; w < words && !meet; ++w)
        for (std::uint64_t bits = bounds[w]; bits != 0; bits &= bits - 1) {
          const Elem z = static_cast<Elem>(w * 64 + std::countr_zero(bits));
          if (lattice.down_count_[z] == lower_count) {
            meet = z;
            break;
          }
        }
      if (!meet)
        throw Error(ErrorCode::NotALattice,
                    "no unique meet for " + quoted(lattice.labels_, x) + ", " +
                        quoted(lattice.labels_, y));

      std::size_t upper_count = 0;
      for (std::size_t w = 0; w < words; ++w) {
        bounds[w] = lattice.order_[x * words + w] & lattice.order_[y * words + w];
        upper_count += std::popcount(bounds[w]);
      }
      std::optional<Elem> join;
      for (std::size_t w = 0; w < words && !join; ++w)
        for (std::uint64_t bits = bounds[w]; bits != 0; bits &= bits - 1) {
          const Elem z = static_cast<Elem>(w * 64 + std::countr_zero(bits));
          if (up_count[z] == upper_count) {
            join = z;
            break;
          }
        }
      if (!join)
        throw Error(ErrorCode::NotALattice,
                    "no unique join for " + quoted(lattice.labels_, x) + ", " +
                        quoted(lattice.labels_, y));

      lattice.meet_[x * n + y] = lattice.meet_[y * n + x] =
          static_cast<std::uint16_t>(*meet);
      lattice.join_[x * n + y] = lattice.join_[y * n + x] =
          static_cast<std::uint16_t>(*join);
    }
  }
  lattice.finish_tables();
  return lattice;
}

FiniteLattice make_lattice_unchecked(std::vector<std::string> labels,
                                     const Relation& leq,
                                     std::vector<Elem> meet,
                                     std::vector<Elem> join) {
  const std::size_t n = leq.size();
  if (n == 0 || n > kMaxLatticeSize) {
    throw Error(ErrorCode::SizeLimitExceeded,
                std::to_string(n) + " elements outside [1, " +
                    std::to_string(kMaxLatticeSize) + "]");
  }
  if (labels.size() != n || meet.size() != n * n || join.size() != n * n)
    throw Error(ErrorCode::IndexOutOfRange, "table dimensions do not match");
  FiniteLattice lattice(std::move(labels), leq);
  lattice.meet_.assign(meet.begin(), meet.end());
  lattice.join_.assign(join.begin(), join.end());
  lattice.finish_tables();
  return lattice;
}

std::optional<Triple> modularity_violation(const FiniteLattice& lattice) {
  const auto n = static_cast<Elem>(lattice.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!lattice.lt(a, b)) continue;
      for (Elem x = 0; x < n; ++x)
        if (lattice.join(a, lattice.meet(x, b)) !=
            lattice.meet(lattice.join(a, x), b))
          return Triple{a, x, b};
    }
  return std::nullopt;
}

std::optional<Triple> distributivity_violation(const FiniteLattice& lattice) {
  const auto n = static_cast<Elem>(lattice.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = y + 1; z < n; ++z)
        if (lattice.meet(x, lattice.join(y, z)) !=
            lattice.join(lattice.meet(x, y), lattice.meet(x, z)))
          return Triple{x, y, z};
  return std::nullopt;
}

bool is_modular(const FiniteLattice& lattice) {
  return !modularity_violation(lattice).has_value();
}

bool is_distributive(const FiniteLattice& lattice) {
  return !distributivity_violation(lattice).has_value();
}

std::vector<Elem> atoms(const FiniteLattice& lattice) {
  std::vector<Elem> out;
  for (Elem x = 0; x < lattice.size(); ++x)
    if (lattice.down_count(x) == 2) out.push_back(x);
  return out;
}

std::vector<Elem> maximal_elements(const FiniteLattice& lattice) {
  std::vector<Elem> out;
  const Elem top = lattice.top();
  for (Elem x = 0; x < lattice.size(); ++x) {
    if (x == top) continue;
    bool covered_by_top = true;
    for (Elem y = 0; y < lattice.size() && covered_by_top; ++y)
      if (y != top && lattice.lt(x, y)) covered_by_top = false;
    if (covered_by_top) out.push_back(x);
  }
  return out;
}

std::vector<Elem> complements_of(const FiniteLattice& lattice, Elem x) {
  lattice.check_index(x);
  std::vector<Elem> out;
  for (Elem y = 0; y < lattice.size(); ++y)
    if (lattice.meet(x, y) == lattice.bottom() &&
        lattice.join(x, y) == lattice.top())
      out.push_back(y);
  return out;
}

std::optional<Elem> pseudo_complement(const FiniteLattice& lattice, Elem x) {
  lattice.check_index(x);
  // If a greatest disjoint element exists it is the join of all of them.
  Elem candidate = lattice.bottom();
  for (Elem y = 0; y < lattice.size(); ++y)
    if (lattice.meet(x, y) == lattice.bottom())
      candidate = lattice.join(candidate, y);
  if (lattice.meet(x, candidate) != lattice.bottom()) return std::nullopt;
  return candidate;
}

namespace {

void check_hom_shape(const LatticeHom& hom) {
  if (hom.source == nullptr || hom.target == nullptr)
    throw Error(ErrorCode::IndexOutOfRange, "homomorphism without endpoints");
  if (hom.map.size() != hom.source->size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "map has " + std::to_string(hom.map.size()) +
                    " entries for a source of size " +
                    std::to_string(hom.source->size()));
  }
  for (Elem image : hom.map) hom.target->check_index(image);
}

}  // namespace

bool is_lattice_hom(const LatticeHom& hom) {
  check_hom_shape(hom);
  const FiniteLattice& src = *hom.source;
  const FiniteLattice& dst = *hom.target;
  if (hom.map[src.bottom()] != dst.bottom()) return false;
  for (Elem x = 0; x < src.size(); ++x)
    for (Elem y = x + 1; y < src.size(); ++y)
      if (hom.map[src.join(x, y)] != dst.join(hom.map[x], hom.map[y]))
        return false;
  return true;
}

bool is_injective(const LatticeHom& hom) {
  check_hom_shape(hom);
  std::vector<bool> seen(hom.target->size(), false);
  for (Elem image : hom.map) {
    if (seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

}  // namespace mulat
