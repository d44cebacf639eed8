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

#include "mulat/enumerate.hpp"

#include <string>
#include <unordered_map>

#include "mulat/error.hpp"
#include "mulat/isomorphism.hpp"

namespace mulat {

namespace {

std::vector<std::string> labels_for(int n) {
  std::vector<std::string> labels;
  labels.emplace_back("0");
  for (int i = 0; i + 2 < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  if (n > 1) labels.emplace_back("1");
  return labels;
}

// Calls `visit` with every naturally labelled poset on m elements, given as
// strict down-set bitmasks (bit j of down[i] set iff j < i in the poset).
void for_each_natural_poset(int m,
                            const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> down(m, 0);
  std::function<void(int)> place = [&](int k) {
    if (k == m) {
      visit(down);
      return;
    }
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      bool closed = true;
      for (int j = 0; j < k && closed; ++j)
        if ((mask >> j & 1u) && (down[j] & ~mask) != 0) closed = false;
      if (!closed) continue;
      down[k] = mask;
      place(k + 1);
    }
  };
  place(0);
}

void generate_size(int n, const std::function<void(FiniteLattice)>& emit) {
  if (n == 1) {
    emit(build_lattice(labels_for(1), Relation::identity(1)));
    return;
  }
  const int m = n - 2;
  for_each_natural_poset(m, [&](const std::vector<unsigned>& down) {
    Relation leq = Relation::identity(n);
    const Elem top = static_cast<Elem>(n - 1);
    for (Elem x = 0; x < static_cast<Elem>(n); ++x) {
      leq.set(0, x);
      leq.set(x, top);
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (down[i] >> j & 1u) leq.set(j + 1, i + 1);
    try {
      emit(build_lattice(labels_for(n), leq));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotALattice) throw;
    }
  });
}

}  // namespace

void for_each_lattice(int max_size, Dedupe dedupe,
                      const std::function<void(const FiniteLattice&)>& visit) {
  if (max_size < 1 || max_size > kMaxEnumerationSize) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "enumeration size " + std::to_string(max_size) +
                    " outside [1, " + std::to_string(kMaxEnumerationSize) + "]");
  }
  for (int n = 1; n <= max_size; ++n) {
    std::vector<FiniteLattice> kept;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    generate_size(n, [&](FiniteLattice lattice) {
      if (dedupe == Dedupe::none) {
        visit(lattice);
        return;
      }
      auto& bucket = buckets[invariant_hash(lattice)];
      for (std::size_t idx : bucket)
        if (are_isomorphic(kept[idx], lattice)) return;
      bucket.push_back(kept.size());
      kept.push_back(std::move(lattice));
      visit(kept.back());
    });
  }
}

std::vector<FiniteLattice> enumerate_lattices(int max_size, Dedupe dedupe) {
  std::vector<FiniteLattice> out;
  for_each_lattice(max_size, dedupe,
                   [&](const FiniteLattice& l) { out.push_back(l); });
  return out;
}

}  // namespace mulat
