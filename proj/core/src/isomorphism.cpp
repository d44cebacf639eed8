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

#include "mulat/isomorphism.hpp"

#include <algorithm>
#include <functional>

namespace mulat {

std::vector<std::uint64_t> element_invariants(const FiniteLattice& lattice) {
  const auto n = static_cast<Elem>(lattice.size());
  std::vector<std::uint64_t> up(n, 0), lower_covers(n, 0), upper_covers(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (lattice.leq(x, y)) ++up[x];
  const auto covers = lattice.covers();
  for (auto [x, y] : covers) {
    ++upper_covers[x];
    ++lower_covers[y];
  }
  // Height along covers; elements sorted by down-set size form a linear
  // extension.
  std::vector<Elem> order(n);
  for (Elem x = 0; x < n; ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](Elem x, Elem y) {
    return lattice.down_count(x) < lattice.down_count(y);
  });
  std::vector<std::uint64_t> height(n, 0);
  for (Elem y : order)
    for (auto [x, z] : covers)
      if (z == y) height[y] = std::max(height[y], height[x] + 1);

  std::vector<std::uint64_t> out(n);
  for (Elem x = 0; x < n; ++x) {
    out[x] = (std::uint64_t{lattice.down_count(x)} << 48) | (up[x] << 32) |
             (lower_covers[x] << 24) | (upper_covers[x] << 16) | height[x];
  }
  return out;
}

std::uint64_t invariant_hash(const FiniteLattice& lattice) {
  auto inv = element_invariants(lattice);
  std::sort(inv.begin(), inv.end());
  std::uint64_t h = 1469598103934665603ull ^ lattice.size();
  for (std::uint64_t v : inv) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<std::vector<Elem>> find_isomorphism(
    const FiniteLattice& a, const FiniteLattice& b,
    std::span<const Elem> table_a, std::span<const Elem> table_b) {
  const auto n = static_cast<Elem>(a.size());
  if (b.size() != n) return std::nullopt;
  const bool with_table = !table_a.empty();
  if (with_table && (table_a.size() != std::size_t{n} * n ||
                     table_b.size() != std::size_t{n} * n))
    return std::nullopt;

  const auto inv_a = element_invariants(a);
  const auto inv_b = element_invariants(b);
  {
    auto sa = inv_a, sb = inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> map(n, kUnset);
  std::vector<bool> used(n, false);

  // Products landing on a later index are only checked once the map is
  // complete.
  auto carries_table = [&] {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (map[table_a[x * n + y]] != table_b[map[x] * n + map[y]]) return false;
    return true;
  };

  std::function<bool(Elem)> extend = [&](Elem i) -> bool {
    if (i == n) return !with_table || carries_table();
    for (Elem c = 0; c < n; ++c) {
      if (used[c] || inv_b[c] != inv_a[i]) continue;
      bool ok = true;
      for (Elem j = 0; j < i && ok; ++j) {
        if (a.leq(i, j) != b.leq(c, map[j]) || a.leq(j, i) != b.leq(map[j], c))
          ok = false;
      }
      if (ok && with_table) {
        map[i] = c;
        for (Elem j = 0; j <= i && ok; ++j) {
          const Elem r1 = table_a[i * n + j];
          const Elem r2 = table_a[j * n + i];
          if (r1 <= i && map[r1] != table_b[c * n + map[j]]) ok = false;
          if (r2 <= i && map[r2] != table_b[map[j] * n + c]) ok = false;
        }
        map[i] = kUnset;
      }
      if (!ok) continue;
      map[i] = c;
      used[c] = true;
      if (extend(i + 1)) return true;
      map[i] = kUnset;
      used[c] = false;
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  return map;
}

}  // namespace mulat
