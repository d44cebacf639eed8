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

#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

Poset::Poset(std::vector<std::vector<bool>> le) : le_(std::move(le)) {
  const std::size_t n = le_.size();
  glb_.assign(n, std::vector<std::optional<Elem>>(n));
  lub_.assign(n, std::vector<std::optional<Elem>>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      // greatest lower bound: a lower bound above every other lower bound
      for (Elem c = 0; c < n; ++c) {
        if (!(le_[c][x] && le_[c][y])) continue;
        bool greatest = true;
        for (Elem d = 0; d < n && greatest; ++d)
          if (le_[d][x] && le_[d][y] && !le_[d][c]) greatest = false;
        if (greatest) glb_[x][y] = c;
      }
      for (Elem c = 0; c < n; ++c) {
        if (!(le_[x][c] && le_[y][c])) continue;
        bool least = true;
        for (Elem d = 0; d < n && least; ++d)
          if (le_[x][d] && le_[y][d] && !le_[c][d]) least = false;
        if (least) lub_[x][y] = c;
      }
    }
}

Poset Poset::of(const mulat::FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) le[x][y] = lattice.leq(x, y);
  return Poset(std::move(le));
}

bool Poset::is_lattice() const {
  if (le_.empty()) return false;
  for (const auto& row : glb_)
    for (const auto& g : row)
      if (!g) return false;
  for (const auto& row : lub_)
    for (const auto& l : row)
      if (!l) return false;
  return true;
}

Elem Poset::bottom() const {
  for (Elem x = 0; x < size(); ++x) {
    bool below_all = true;
    for (Elem y = 0; y < size(); ++y) below_all = below_all && le_[x][y];
    if (below_all) return x;
  }
  return 0;
}

Elem Poset::top() const {
  for (Elem x = 0; x < size(); ++x) {
    bool above_all = true;
    for (Elem y = 0; y < size(); ++y) above_all = above_all && le_[y][x];
    if (above_all) return x;
  }
  return 0;
}

std::vector<Elem> interval(const Poset& p, Elem low, Elem high) {
  std::vector<Elem> out;
  for (Elem x = 0; x < p.size(); ++x)
    if (p.le(low, x) && p.le(x, high)) out.push_back(x);
  return out;
}

bool essential(const Poset& p, Elem low, Elem high, Elem x) {
  for (Elem y : interval(p, low, high))
    if (y != low && p.meet(x, y) == low) return false;
  return true;
}

bool mu(const Poset& p, Elem low, Elem high, Elem x) {
  // The condition only depends on the meet of the family, so it suffices to
  // walk the meet-closure of the admissible members, dropping meets equal to
  // low (a family with meet low is vacuous and so is every larger one).
  std::vector<Elem> reach;
  for (Elem y : interval(p, low, high))
    if (y != low && p.meet(x, y) != low) reach.push_back(y);
  std::vector<bool> seen(p.size());
  for (Elem y : reach) seen[y] = true;
  for (std::size_t i = 0; i < reach.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const Elem m = p.meet(reach[i], reach[j]);
      if (m != low && !seen[m]) {
        seen[m] = true;
        reach.push_back(m);
      }
    }
  for (Elem m : reach)
    if (p.meet(x, m) == low) return false;
  return true;
}

bool irreducible(const Poset& p, Elem low, Elem x) {
  const auto below = interval(p, low, x);
  for (Elem y : below)
    for (Elem z : below)
      if (y != low && z != low && p.meet(y, z) == low) return false;
  return true;
}

bool essential(const Poset& p, Elem x) { return essential(p, p.bottom(), p.top(), x); }
bool mu(const Poset& p, Elem x) { return mu(p, p.bottom(), p.top(), x); }
bool irreducible(const Poset& p, Elem x) { return irreducible(p, p.bottom(), x); }

bool mu_closed(const Poset& p, Elem x) {
  for (Elem b = 0; b < p.size(); ++b)
    if (b != x && p.le(x, b) && mu(p, p.bottom(), b, x)) return false;
  return true;
}

bool essentially_closed(const Poset& p, Elem x) {
  for (Elem b = 0; b < p.size(); ++b)
    if (b != x && p.le(x, b) && essential(p, p.bottom(), b, x)) return false;
  return true;
}

std::optional<Elem> pseudo_complement(const Poset& p, Elem x) {
  std::vector<Elem> disjoint;
  for (Elem y = 0; y < p.size(); ++y)
    if (p.meet(x, y) == p.bottom()) disjoint.push_back(y);
  for (Elem g : disjoint) {
    bool greatest = true;
    for (Elem y : disjoint) greatest = greatest && p.le(y, g);
    if (greatest) return g;
  }
  return std::nullopt;
}

std::vector<Elem> maximal_disjoint(const Poset& p, Elem x) {
  std::vector<Elem> out;
  for (Elem y = 0; y < p.size(); ++y) {
    if (p.meet(x, y) != p.bottom()) continue;
    bool maximal = true;
    for (Elem z = 0; z < p.size() && maximal; ++z)
      if (z != y && p.le(y, z) && p.meet(x, z) == p.bottom()) maximal = false;
    if (maximal) out.push_back(y);
  }
  return out;
}

std::vector<Elem> mu_complements(const Poset& p, Elem x) {
  std::vector<Elem> out;
  for (Elem y = 0; y < p.size(); ++y)
    if (p.meet(x, y) == p.bottom() && mu(p, p.join(x, y))) out.push_back(y);
  return out;
}

bool modular(const Poset& p) {
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b)
      for (Elem c = 0; c < p.size(); ++c)
        if (p.le(a, c) && p.join(a, p.meet(b, c)) != p.meet(p.join(a, b), c))
          return false;
  return true;
}

bool distributive(const Poset& p) {
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b)
      for (Elem c = 0; c < p.size(); ++c)
        if (p.meet(a, p.join(b, c)) != p.join(p.meet(a, b), p.meet(a, c)))
          return false;
  return true;
}

namespace zn {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

bool essential(std::uint64_t n, std::uint64_t d) {
  for (auto e : divisors(n))
    if (e != n && std::lcm(d, e) == n) return false;
  return true;
}

bool mu(std::uint64_t n, std::uint64_t d) {
  std::vector<std::uint64_t> reach;
  for (auto e : divisors(n))
    if (e != n && std::lcm(d, e) != n) reach.push_back(e);
  std::set<std::uint64_t> seen(reach.begin(), reach.end());
  for (std::size_t i = 0; i < reach.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const auto m = std::lcm(reach[i], reach[j]);
      if (m != n && seen.insert(m).second) reach.push_back(m);
    }
  for (auto m : reach)
    if (std::lcm(d, m) == n) return false;
  return true;
}

bool irreducible(std::uint64_t n, std::uint64_t d) {
  for (auto e : divisors(n))
    for (auto f : divisors(n))
      if (e % d == 0 && f % d == 0 && e != n && f != n && std::lcm(e, f) == n)
        return false;
  return true;
}

}  // namespace zn

namespace opens {

bool dense(const std::vector<std::uint64_t>& family, std::uint64_t u) {
  for (auto v : family)
    if (v != 0 && (u & v) == 0) return false;
  return true;
}

bool irreducible(const std::vector<std::uint64_t>& family, std::uint64_t u) {
  for (auto v : family)
    for (auto w : family)
      if (v != 0 && w != 0 && (v & ~u) == 0 && (w & ~u) == 0 && (v & w) == 0)
        return false;
  return true;
}

bool mu(const std::vector<std::uint64_t>& family, std::uint64_t low,
        std::uint64_t high, std::uint64_t u) {
  std::vector<std::uint64_t> reach;
  for (auto v : family)
    if ((low & ~v) == 0 && (v & ~high) == 0 && v != low && (u & v) != low)
      reach.push_back(v);
  std::set<std::uint64_t> seen(reach.begin(), reach.end());
  for (std::size_t i = 0; i < reach.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const auto m = reach[i] & reach[j];
      if (m != low && seen.insert(m).second) reach.push_back(m);
    }
  for (auto m : reach)
    if ((u & m) == low) return false;
  return true;
}

std::vector<std::uint64_t> up_sets(const std::vector<std::uint64_t>& above) {
  const std::size_t k = above.size();
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << k); ++u) {
    bool closed = true;
    for (std::size_t i = 0; i < k && closed; ++i)
      if ((u >> i & 1u) && (above[i] & ~u) != 0) closed = false;
    if (closed) out.push_back(u);
  }
  return out;
}

}  // namespace opens

std::vector<std::size_t> lattice_counts(int max_size) {
  std::vector<std::size_t> counts;
  for (int n = 1; n <= max_size; ++n) {
    if (n <= 2) {
      counts.push_back(1);
      continue;
    }
    const int m = n - 2;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j) slots.emplace_back(i, j);
    std::vector<int> perm(m);
    std::set<std::uint64_t> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<std::vector<bool>> lt(m, std::vector<bool>(m));
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1u) lt[slots[s].first][slots[s].second] = true;
      bool order = true;
      for (int i = 0; i < m && order; ++i)
        for (int j = 0; j < m && order; ++j) {
          if (lt[i][j] && lt[j][i]) order = false;
          for (int k = 0; k < m && order; ++k)
            if (lt[i][j] && lt[j][k] && !lt[i][k]) order = false;
        }
      if (!order) continue;
      // bottom 0, middles 1..m, top n-1
      std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
      for (int x = 0; x < n; ++x) {
        le[0][x] = true;
        le[x][n - 1] = true;
        le[x][x] = true;
      }
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (lt[i][j]) le[i + 1][j + 1] = true;
      if (!Poset(le).is_lattice()) continue;
      std::iota(perm.begin(), perm.end(), 0);
      std::uint64_t best = ~std::uint64_t{0};
      do {
        std::uint64_t code = 0;
        for (std::size_t s = 0; s < slots.size(); ++s)
          if (lt[perm[slots[s].first]][perm[slots[s].second]]) code |= std::uint64_t{1} << s;
        best = std::min(best, code);
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.insert(best);
    }
    counts.push_back(classes.size());
  }
  return counts;
}

}  // namespace oracle
