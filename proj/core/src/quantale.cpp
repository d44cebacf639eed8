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

#include "mulat/quantale.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "mulat/error.hpp"
#include "mulat/isomorphism.hpp"

namespace mulat {

namespace {

std::string name(const FiniteLattice& l, Elem x) { return "'" + l.label(x) + "'"; }

}  // namespace

Quantale::Quantale(FiniteLattice lattice, std::vector<Elem> mult)
    : lattice_(std::move(lattice)), mult_(std::move(mult)) {
  const auto n = static_cast<Elem>(lattice_.size());
  frame_ = true;
  for (Elem x = 0; x < n && frame_; ++x)
    for (Elem y = 0; y < n; ++y)
      if (mult_[x * n + y] != lattice_.meet(x, y)) {
        frame_ = false;
        break;
      }
}

Quantale build_quantale(FiniteLattice lattice, std::vector<Elem> mult) {
  const auto n = static_cast<Elem>(lattice.size());
  if (mult.size() != std::size_t{n} * n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "multiplication table has " + std::to_string(mult.size()) +
                    " entries, expected " + std::to_string(std::size_t{n} * n));
  }
  for (Elem v : mult) lattice.check_index(v);
  auto m = [&](Elem x, Elem y) { return mult[x * n + y]; };
  const FiniteLattice& l = lattice;

  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (m(x, y) != m(y, x))
        throw Error(ErrorCode::NotCommutative,
                    name(l, x) + "·" + name(l, y) + " != " + name(l, y) + "·" +
                        name(l, x));
  for (Elem x = 0; x < n; ++x)
    if (m(x, l.top()) != x)
      throw Error(ErrorCode::IdentityViolation,
                  name(l, x) + "·1 = " + name(l, m(x, l.top())));
  for (Elem x = 0; x < n; ++x)
    if (m(x, l.bottom()) != l.bottom())
      throw Error(ErrorCode::NotJoinDistributive,
                  name(l, x) + "·0 = " + name(l, m(x, l.bottom())) +
                      " (empty join not preserved)");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (m(m(x, y), z) != m(x, m(y, z)))
          throw Error(ErrorCode::NotAssociative,
                      "(" + name(l, x) + "·" + name(l, y) + ")·" + name(l, z));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = y + 1; z < n; ++z)
        if (m(x, l.join(y, z)) != l.join(m(x, y), m(x, z)))
          throw Error(ErrorCode::NotJoinDistributive,
                      name(l, x) + "·(" + name(l, y) + " ∨ " + name(l, z) + ")");
  return Quantale(std::move(lattice), std::move(mult));
}

Quantale make_quantale_unchecked(FiniteLattice lattice, std::vector<Elem> mult) {
  const std::size_t n = lattice.size();
  if (mult.size() != n * n)
    throw Error(ErrorCode::IndexOutOfRange, "multiplication table dimensions");
  return Quantale(std::move(lattice), std::move(mult));
}

Quantale frame_from(FiniteLattice lattice) {
  if (auto bad = distributivity_violation(lattice)) {
    throw Error(ErrorCode::NotDistributive,
                name(lattice, bad->a) + " ∧ (" + name(lattice, bad->b) + " ∨ " +
                    name(lattice, bad->c) + ")");
  }
  const auto n = static_cast<Elem>(lattice.size());
  std::vector<Elem> mult(std::size_t{n} * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) mult[x * n + y] = lattice.meet(x, y);
  return make_quantale_unchecked(std::move(lattice), std::move(mult));
}

Elem annihilator(const Quantale& q, Elem a) {
  const FiniteLattice& l = q.lattice();
  l.check_index(a);
  Elem acc = l.bottom();
  for (Elem x = 0; x < l.size(); ++x)
    if (q.mult(x, a) == l.bottom()) acc = l.join(acc, x);
  return acc;
}

bool is_regular(const Quantale& q, Elem a) {
  return annihilator(q, annihilator(q, a)) == a;
}

bool is_domain(const Quantale& q) {
  const FiniteLattice& l = q.lattice();
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y)
      if (x != l.bottom() && y != l.bottom() && q.mult(x, y) == l.bottom())
        return false;
  return true;
}

bool is_local(const FiniteLattice& lattice) {
  return maximal_elements(lattice).size() == 1;
}

bool is_quantale_hom(const QuantaleHom& hom) {
  const LatticeHom lh = hom.lattice_hom();
  if (!is_lattice_hom(lh)) return false;
  const FiniteLattice& src = hom.source->lattice();
  const FiniteLattice& dst = hom.target->lattice();
  if (hom.map[src.top()] != dst.top()) return false;
  for (Elem x = 0; x < src.size(); ++x)
    for (Elem y = x; y < src.size(); ++y)
      if (hom.map[hom.source->mult(x, y)] !=
          hom.target->mult(hom.map[x], hom.map[y]))
        return false;
  return true;
}

std::vector<QuantaleHom> find_injective_homs(const Quantale& source,
                                             const Quantale& target,
                                             std::size_t budget) {
  const FiniteLattice& src = source.lattice();
  const FiniteLattice& dst = target.lattice();
  const auto n = static_cast<Elem>(src.size());
  const auto m = static_cast<Elem>(dst.size());
  std::vector<QuantaleHom> found;
  if (n > m) return found;

  // Assign along a linear extension so bottom comes first and joins tend to
  // be decided early.
  std::vector<Elem> order(n);
  for (Elem x = 0; x < n; ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(), [&](Elem x, Elem y) {
    return src.down_count(x) < src.down_count(y);
  });

  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> map(n, kUnset);
  std::vector<bool> used(m, false);
  std::size_t nodes = 0;

  auto consistent = [&](Elem s, Elem t) {
    if (s == src.bottom() && t != dst.bottom()) return false;
    if (s == src.top() && t != dst.top()) return false;
    if (map[source.mult(s, s)] != kUnset &&
        map[source.mult(s, s)] != target.mult(t, t))
      return false;
    for (Elem u = 0; u < n; ++u) {
      if (map[u] == kUnset) continue;
      const Elem tu = map[u];
      if (src.leq(s, u) != dst.leq(t, tu) || src.leq(u, s) != dst.leq(tu, t))
        return false;
      const Elem j = src.join(s, u);
      if (map[j] != kUnset && map[j] != dst.join(t, tu)) return false;
      const Elem p = source.mult(s, u);
      if (map[p] != kUnset && map[p] != target.mult(t, tu)) return false;
    }
    return true;
  };

  std::function<void(Elem)> extend = [&](Elem depth) {
    if (++nodes > budget) {
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "more than " + std::to_string(budget) + " search nodes");
    }
    if (depth == n) {
      QuantaleHom hom{&source, &target, map};
      if (is_quantale_hom(hom)) found.push_back(std::move(hom));
      return;
    }
    const Elem s = order[depth];
    for (Elem t = 0; t < m; ++t) {
      if (used[t] || !consistent(s, t)) continue;
      map[s] = t;
      used[t] = true;
      extend(depth + 1);
      map[s] = kUnset;
      used[t] = false;
    }
  };
  extend(0);
  std::sort(found.begin(), found.end(),
            [](const QuantaleHom& a, const QuantaleHom& b) { return a.map < b.map; });
  return found;
}

bool are_isomorphic(const Quantale& a, const Quantale& b) {
  return find_isomorphism(a.lattice(), b.lattice(), a.mult_table(),
                          b.mult_table())
      .has_value();
}

}  // namespace mulat
