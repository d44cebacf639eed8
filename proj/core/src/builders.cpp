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

#include "mulat/builders.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <set>

#include "mulat/error.hpp"

namespace mulat {

// FactoredModulus

FactoredModulus FactoredModulus::of_integer(std::uint64_t n) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidModulus,
                "modulus " + std::to_string(n) + " is below 2");
  }
  FactoredModulus out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) {
      out.primes.push_back(std::to_string(p));
      out.exponents.push_back(e);
    }
  }
  if (n > 1) {
    out.primes.push_back(std::to_string(n));
    out.exponents.push_back(1);
  }
  return out;
}

std::size_t FactoredModulus::ideal_count() const {
  std::size_t count = 1;
  for (int m : exponents) {
    count *= static_cast<std::size_t>(m + 1);
    if (count > kMaxLatticeSize) return count;
  }
  return count;
}

std::optional<std::uint64_t> FactoredModulus::integer_value() const {
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::string& p = primes[i];
    if (p.empty() || !std::all_of(p.begin(), p.end(), [](unsigned char c) {
          return std::isdigit(c) != 0;
        }))
      return std::nullopt;
    const std::uint64_t base = std::stoull(p);
    for (int e = 0; e < exponents[i]; ++e) value *= base;
  }
  return value;
}

void FactoredModulus::validate() const {
  if (primes.empty())
    throw Error(ErrorCode::InvalidModulus, "no prime factors");
  if (primes.size() != exponents.size())
    throw Error(ErrorCode::InvalidModulus, "primes and exponents differ in length");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (exponents[i] < 1)
      throw Error(ErrorCode::InvalidModulus,
                  "exponent of '" + primes[i] + "' is " +
                      std::to_string(exponents[i]));
    for (std::size_t j = 0; j < i; ++j)
      if (primes[i] == primes[j])
        throw Error(ErrorCode::InvalidModulus,
                    "prime '" + primes[i] + "' repeated");
  }
}

// ExponentQuantale

namespace {

std::vector<std::size_t> strides_of(const std::vector<int>& m) {
  std::vector<std::size_t> strides(m.size());
  std::size_t s = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    strides[i] = s;
    s *= static_cast<std::size_t>(m[i] + 1);
  }
  return strides;
}

bool is_bare_token(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isalnum(c) != 0; });
}

std::string ideal_label(const FactoredModulus& mod, const ExponentVector& e) {
  if (auto value = mod.integer_value()) {
    std::uint64_t d = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) d *= std::stoull(mod.primes[i]);
    return "(" + std::to_string(d) + ")";
  }
  if (e == mod.exponents) return "(0)";
  std::string body;
  bool previous_bare = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    const bool bare = is_bare_token(mod.primes[i]);
    if (bare && previous_bare) body += "*";
    body += bare ? mod.primes[i] : "(" + mod.primes[i] + ")";
    if (e[i] > 1) body += "^" + std::to_string(e[i]);
    previous_bare = bare;
  }
  if (body.empty()) return "(1)";
  if (body.front() == '(' && body.back() == ')' &&
      std::count(body.begin(), body.end(), '(') == 1)
    return body;
  return "(" + body + ")";
}

}  // namespace

ExponentQuantale::ExponentQuantale(FactoredModulus modulus, Quantale quantale,
                                   std::vector<ExponentVector> exponents)
    : modulus_(std::move(modulus)),
      quantale_(std::move(quantale)),
      exponents_(std::move(exponents)) {}

Elem ExponentQuantale::index_of(std::span<const int> e) const {
  const auto& m = modulus_.exponents;
  if (e.size() != m.size())
    throw Error(ErrorCode::ExponentOutOfRange,
                "vector of length " + std::to_string(e.size()) + " for " +
                    std::to_string(m.size()) + " primes");
  const auto strides = strides_of(m);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (e[i] < 0 || e[i] > m[i])
      throw Error(ErrorCode::ExponentOutOfRange,
                  "exponent " + std::to_string(e[i]) + " of '" +
                      modulus_.primes[i] + "' outside [0, " +
                      std::to_string(m[i]) + "]");
    idx += static_cast<std::size_t>(e[i]) * strides[i];
  }
  return static_cast<Elem>(idx);
}

Elem ExponentQuantale::index_of_generator(std::uint64_t l) const {
  ExponentVector e(modulus_.primes.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::uint64_t p = std::stoull(modulus_.primes[i]);
    if (l == 0) {
      e[i] = modulus_.exponents[i];
      continue;
    }
    std::uint64_t rest = l;
    while (e[i] < modulus_.exponents[i] && rest % p == 0) {
      rest /= p;
      ++e[i];
    }
  }
  return index_of(e);
}

ExponentQuantale ideal_quantale(const FactoredModulus& modulus) {
  modulus.validate();
  const std::size_t n = modulus.ideal_count();
  if (n > kMaxLatticeSize) {
    throw Error(ErrorCode::SizeLimitExceeded,
                std::to_string(n) + " ideals exceeds the limit of " +
                    std::to_string(kMaxLatticeSize));
  }
  const auto& m = modulus.exponents;
  const std::size_t k = m.size();
  const auto strides = strides_of(m);

  std::vector<ExponentVector> exps(n, ExponentVector(k, 0));
  for (std::size_t idx = 0; idx < n; ++idx)
    for (std::size_t i = 0; i < k; ++i)
      exps[idx][i] = static_cast<int>((idx / strides[i]) % (m[i] + 1));

  auto encode = [&](auto&& component) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i)
      idx += static_cast<std::size_t>(component(i)) * strides[i];
    return static_cast<Elem>(idx);
  };

  Relation leq(n);
  std::vector<Elem> meet(n * n), join(n * n), mult(n * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back(ideal_label(modulus, exps[x]));
    const auto& a = exps[x];
    for (std::size_t y = 0; y < n; ++y) {
      const auto& b = exps[y];
      bool contained = true;
      for (std::size_t i = 0; i < k; ++i)
        if (a[i] < b[i]) contained = false;
      if (contained) leq.set(static_cast<Elem>(x), static_cast<Elem>(y));
      meet[x * n + y] = encode([&](std::size_t i) { return std::max(a[i], b[i]); });
      join[x * n + y] = encode([&](std::size_t i) { return std::min(a[i], b[i]); });
      mult[x * n + y] =
          encode([&](std::size_t i) { return std::min(a[i] + b[i], m[i]); });
    }
  }
  FiniteLattice lattice = make_lattice_unchecked(std::move(labels), leq,
                                                 std::move(meet), std::move(join));
  return ExponentQuantale(modulus,
                          make_quantale_unchecked(std::move(lattice), std::move(mult)),
                          std::move(exps));
}

ExponentQuantale zn_ideals(std::uint64_t n) {
  return ideal_quantale(FactoredModulus::of_integer(n));
}

// Topologies

void TopologySpec::validate() const {
  if (points.size() > 64)
    throw Error(ErrorCode::SizeLimitExceeded, "more than 64 points");
  const PointSet all = full();
  std::set<PointSet> family;
  for (PointSet u : opens) {
    if ((u & ~all) != 0)
      throw Error(ErrorCode::NotATopology, "open mentions an unknown point");
    if (!family.insert(u).second)
      throw Error(ErrorCode::NotATopology,
                  "open " + point_set_label(*this, u) + " listed twice");
  }
  if (!family.count(0)) throw Error(ErrorCode::NotATopology, "∅ is not open");
  if (!family.count(all))
    throw Error(ErrorCode::NotATopology, "the whole space is not open");
  for (PointSet u : opens)
    for (PointSet v : opens) {
      if (!family.count(u | v))
        throw Error(ErrorCode::NotATopology,
                    "union of " + point_set_label(*this, u) + " and " +
                        point_set_label(*this, v) + " is not open");
      if (!family.count(u & v))
        throw Error(ErrorCode::NotATopology,
                    "intersection of " + point_set_label(*this, u) + " and " +
                        point_set_label(*this, v) + " is not open");
    }
}

std::vector<PointSet> canonical_opens(const TopologySpec& spec) {
  std::vector<PointSet> sorted = spec.opens;
  std::sort(sorted.begin(), sorted.end(), [](PointSet a, PointSet b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  return sorted;
}

Elem open_index(const TopologySpec& spec, PointSet open) {
  const auto sorted = canonical_opens(spec);
  const auto it = std::find(sorted.begin(), sorted.end(), open);
  if (it == sorted.end())
    throw Error(ErrorCode::NotAnOpen, point_set_label(spec, open) + " is not open");
  return static_cast<Elem>(it - sorted.begin());
}

std::string point_set_label(const TopologySpec& spec, PointSet set) {
  if (set == 0) return "∅";
  if (set == spec.full() && spec.points.size() > 1) return "X";
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    if (!(set >> i & 1u)) continue;
    if (!first) out += ",";
    out += spec.points[i];
    first = false;
  }
  return out + "}";
}

Quantale topology_frame(const TopologySpec& spec) {
  spec.validate();
  if (spec.opens.size() > kMaxLatticeSize)
    throw Error(ErrorCode::SizeLimitExceeded, "too many opens");
  const auto opens = canonical_opens(spec);
  const std::size_t n = opens.size();
  std::vector<std::string> labels;
  for (PointSet u : opens) labels.push_back(point_set_label(spec, u));
  auto index = [&](PointSet u) {
    return static_cast<Elem>(std::find(opens.begin(), opens.end(), u) - opens.begin());
  };
  Relation leq(n);
  std::vector<Elem> meet(n * n), join(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if ((opens[x] & ~opens[y]) == 0) leq.set(static_cast<Elem>(x), static_cast<Elem>(y));
      meet[x * n + y] = index(opens[x] & opens[y]);
      join[x * n + y] = index(opens[x] | opens[y]);
    }
  std::vector<Elem> mult = meet;
  return make_quantale_unchecked(
      make_lattice_unchecked(std::move(labels), leq, std::move(meet), std::move(join)),
      std::move(mult));
}

AlexandrovFrame alexandrov_frame(const Relation& preorder,
                                 std::vector<std::string> point_names) {
  const std::size_t k = preorder.size();
  if (k == 0 || k > 5)
    throw Error(ErrorCode::SizeLimitExceeded,
                std::to_string(k) + " points outside [1, 5]");
  if (!preorder.is_reflexive() || !preorder.is_transitive())
    throw Error(ErrorCode::NotAPreorder, "relation is not reflexive and transitive");
  if (point_names.empty())
    for (std::size_t i = 0; i < k; ++i) point_names.push_back(std::to_string(i + 1));
  if (point_names.size() != k)
    throw Error(ErrorCode::IndexOutOfRange, "point name count");

  TopologySpec spec{std::move(point_names), {}};
  for (PointSet u = 0; u < (PointSet{1} << k); ++u) {
    bool up_closed = true;
    for (Elem x = 0; x < k && up_closed; ++x) {
      if (!(u >> x & 1u)) continue;
      for (Elem y = 0; y < k; ++y)
        if (preorder(x, y) && !(u >> y & 1u)) up_closed = false;
    }
    if (up_closed) spec.opens.push_back(u);
  }
  Quantale frame = topology_frame(spec);
  return AlexandrovFrame{std::move(frame), std::move(spec)};
}

Quantale powerset_frame(int k) {
  if (k < 1 || k > 12)
    throw Error(ErrorCode::SizeLimitExceeded,
                "powerset of " + std::to_string(k) + " points outside [1, 12]");
  TopologySpec names;
  for (int i = 1; i <= k; ++i) names.points.push_back(std::to_string(i));
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  labels.reserve(n);
  Relation leq(n);
  std::vector<Elem> meet(n * n), join(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back(point_set_label(names, x));
    for (std::size_t y = 0; y < n; ++y) {
      if ((x & ~y) == 0) leq.set(static_cast<Elem>(x), static_cast<Elem>(y));
      meet[x * n + y] = static_cast<Elem>(x & y);
      join[x * n + y] = static_cast<Elem>(x | y);
    }
  }
  std::vector<Elem> mult = meet;
  return make_quantale_unchecked(
      make_lattice_unchecked(std::move(labels), leq, std::move(meet), std::move(join)),
      std::move(mult));
}

Quantale chain(int k) {
  if (k < 1 || static_cast<std::size_t>(k) > kMaxLatticeSize)
    throw Error(ErrorCode::SizeLimitExceeded,
                "chain of length " + std::to_string(k));
  const std::size_t n = static_cast<std::size_t>(k);
  std::vector<std::string> labels;
  Relation leq(n);
  std::vector<Elem> meet(n * n), join(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back(std::to_string(x));
    for (std::size_t y = 0; y < n; ++y) {
      if (x <= y) leq.set(static_cast<Elem>(x), static_cast<Elem>(y));
      meet[x * n + y] = static_cast<Elem>(std::min(x, y));
      join[x * n + y] = static_cast<Elem>(std::max(x, y));
    }
  }
  std::vector<Elem> mult = meet;
  return make_quantale_unchecked(
      make_lattice_unchecked(std::move(labels), leq, std::move(meet), std::move(join)),
      std::move(mult));
}

FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b) {
  const std::size_t na = a.size(), nb = b.size();
  const std::size_t n = na * nb;
  if (n > kMaxLatticeSize)
    throw Error(ErrorCode::SizeLimitExceeded,
                "product of " + std::to_string(n) + " elements");
  auto idx = [nb](Elem i, Elem j) { return static_cast<Elem>(i * nb + j); };
  std::vector<std::string> labels;
  Relation leq(n);
  std::vector<Elem> meet(n * n), join(n * n);
  for (Elem i = 0; i < na; ++i)
    for (Elem j = 0; j < nb; ++j) {
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
      const Elem x = idx(i, j);
      for (Elem k = 0; k < na; ++k)
        for (Elem l = 0; l < nb; ++l) {
          const Elem y = idx(k, l);
          if (a.leq(i, k) && b.leq(j, l)) leq.set(x, y);
          meet[x * n + y] = idx(a.meet(i, k), b.meet(j, l));
          join[x * n + y] = idx(a.join(i, k), b.join(j, l));
        }
    }
  return make_lattice_unchecked(std::move(labels), leq, std::move(meet),
                                std::move(join));
}

FiniteLattice m3() {
  return build_lattice({"0", "a", "b", "c", "1"},
                       Relation::from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4},
                                                {2, 4}, {3, 4}})
                           .closure());
}

FiniteLattice n5() {
  return build_lattice({"0", "a", "b", "c", "1"},
                       Relation::from_pairs(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2},
                                                {2, 4}})
                           .closure());
}

}  // namespace mulat
