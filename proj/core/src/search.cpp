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

#include "mulat/search.hpp"

#include <algorithm>

#include "mulat/enumerate.hpp"
#include "mulat/error.hpp"
#include "mulat/mu.hpp"

namespace mulat {

namespace {

constexpr int kMaxSearchSize = 7;

struct Found {
  std::vector<Elem> elements;
  std::string detail;
};

std::string q(const FiniteLattice& l, Elem x) { return "'" + l.label(x) + "'"; }

// mu, not essential, not irreducible, in a lattice that is not modular.
bool mu_odd_one(const FiniteLattice& l, Elem x) {
  return !is_modular(l) && is_mu(l, x) && !is_essential(l, x) && !is_irreducible(l, x);
}

std::optional<Found> find_mu_odd_one(const FiniteLattice& l) {
  if (is_modular(l)) return std::nullopt;
  for (Elem x = 0; x < l.size(); ++x)
    if (mu_odd_one(l, x))
      return Found{{x}, q(l, x) + " is mu, neither essential nor irreducible"};
  return std::nullopt;
}

bool muclosed_converse(const FiniteLattice& l, Elem x, Elem y, Elem b) {
  return x != l.bottom() && pseudo_complement(l, y) == x && l.lt(x, b) &&
         mu_in_down(l, b, x);
}

std::optional<Found> find_muclosed_converse(const FiniteLattice& l) {
  for (Elem x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    const auto b = mu_closed_witness(whole(l), x);
    if (!b) continue;
    for (Elem y = 0; y < l.size(); ++y)
      if (pseudo_complement(l, y) == x)
        return Found{{x, y, *b}, q(l, x) + " is the pseudo-complement of " + q(l, y) +
                                     " but mu in " + q(l, *b) + "-down"};
  }
  return std::nullopt;
}

// Maximal c with a <= c and b ∧ c = 0, for distributive lattices without the
// frame wrapper.
std::vector<Elem> maximal_disjoint_above(const FiniteLattice& l, Elem a, Elem b) {
  std::vector<Elem> cands;
  for (Elem c = 0; c < l.size(); ++c)
    if (l.leq(a, c) && l.meet(b, c) == l.bottom()) cands.push_back(c);
  std::vector<Elem> out;
  for (Elem c : cands)
    if (std::none_of(cands.begin(), cands.end(), [&](Elem d) { return l.lt(c, d); }))
      out.push_back(c);
  return out;
}

bool pcmu_maximality(const FiniteLattice& l, Elem a, Elem b, Elem c0, Elem c) {
  if (!is_distributive(l) || a == l.bottom() || pseudo_complement(l, a) != b) return false;
  const auto maxes = maximal_disjoint_above(l, a, b);
  return std::find(maxes.begin(), maxes.end(), c0) != maxes.end() && l.lt(c0, c) &&
         mu_in_down(l, c, a);
}

std::optional<Found> find_pcmu_maximality(const FiniteLattice& l) {
  if (!is_distributive(l)) return std::nullopt;
  for (Elem a = 0; a < l.size(); ++a) {
    if (a == l.bottom()) continue;
    const auto b = pseudo_complement(l, a);
    if (!b) continue;
    for (Elem c0 : maximal_disjoint_above(l, a, *b))
      for (Elem c = 0; c < l.size(); ++c)
        if (l.lt(c0, c) && mu_in_down(l, c, a))
          return Found{{a, *b, c0, c}, q(l, a) + " is mu in " + q(l, c) +
                                           "-down beyond the maximal " + q(l, c0)};
  }
  return std::nullopt;
}

using Finder = std::optional<Found> (*)(const FiniteLattice&);

Finder finder_for(std::string_view predicate) {
  if (predicate == "mu-not-essential-not-irreducible-nonmodular") return find_mu_odd_one;
  if (predicate == "muclosed-converse") return find_muclosed_converse;
  if (predicate == "pcmu-maximality") return find_pcmu_maximality;
  throw Error(ErrorCode::UnknownCheckName,
              "no search predicate named '" + std::string(predicate) + "'");
}

}  // namespace

const std::vector<std::string>& search_predicates() {
  static const std::vector<std::string> names{"mu-not-essential-not-irreducible-nonmodular",
                                              "muclosed-converse", "pcmu-maximality"};
  return names;
}

SearchResult counterexample_search(std::string_view predicate,
                                   std::span<const FiniteLattice> lattices) {
  const Finder find = finder_for(predicate);
  SearchResult result;
  for (const auto& l : lattices) {
    ++result.lattices_scanned;
    if (auto f = find(l)) {
      result.witness = SearchWitness{std::string(predicate), l, std::move(f->elements),
                                     std::move(f->detail)};
      break;
    }
  }
  return result;
}

SearchResult counterexample_search(std::string_view predicate, int max_size) {
  finder_for(predicate);
  if (max_size > kMaxSearchSize)
    throw Error(ErrorCode::SearchBudgetExceeded,
                "search size " + std::to_string(max_size) + " exceeds " +
                    std::to_string(kMaxSearchSize));
  const auto lattices = enumerate_lattices(max_size, Dedupe::isomorphism);
  return counterexample_search(predicate, lattices);
}

bool verify_witness(const SearchWitness& w) {
  const FiniteLattice& l = w.lattice;
  const auto& e = w.elements;
  for (Elem x : e)
    if (x >= l.size()) return false;
  if (w.predicate == "mu-not-essential-not-irreducible-nonmodular")
    return e.size() == 1 && mu_odd_one(l, e[0]);
  if (w.predicate == "muclosed-converse")
    return e.size() == 3 && muclosed_converse(l, e[0], e[1], e[2]);
  if (w.predicate == "pcmu-maximality")
    return e.size() == 4 && pcmu_maximality(l, e[0], e[1], e[2], e[3]);
  return false;
}

}  // namespace mulat
