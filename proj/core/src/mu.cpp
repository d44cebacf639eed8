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

#include "mulat/mu.hpp"

#include <bit>
#include <functional>
#include <string>

#include "mulat/error.hpp"
#include "mulat/parallel.hpp"

namespace mulat {

namespace {

void require_member(const SublatticeView& view, Elem x) {
  view.parent().check_index(x);
  if (!view.contains(x))
    throw Error(ErrorCode::IndexOutOfRange,
                "'" + view.parent().label(x) + "' is not in the view");
}

void require_modular(const FiniteLattice& lattice) {
  if (auto bad = modularity_violation(lattice)) {
    throw Error(ErrorCode::NotModular,
                "modular law fails for '" + lattice.label(bad->a) + "' <= '" +
                    lattice.label(bad->c) + "' and '" + lattice.label(bad->b) + "'");
  }
}

void require_frame(const Quantale& q) {
  if (!q.is_frame())
    throw Error(ErrorCode::NotAFrame, "multiplication differs from meet");
}

}  // namespace

std::optional<Elem> essential_witness(const SublatticeView& view, Elem x) {
  require_member(view, x);
  const Elem zero = view.bottom();
  for (Elem y : view.elements())
    if (y != zero && view.meet(x, y) == zero) return y;
  return std::nullopt;
}

bool is_essential(const SublatticeView& view, Elem x) {
  return !essential_witness(view, x).has_value();
}

bool is_essential(const FiniteLattice& lattice, Elem x) {
  return is_essential(whole(lattice), x);
}

std::optional<ElemPair> mu_witness(const SublatticeView& view, Elem x) {
  require_member(view, x);
  const Elem zero = view.bottom();
  std::vector<Elem> touching;
  for (Elem y : view.elements())
    if (view.meet(x, y) != zero) touching.push_back(y);
  for (std::size_t i = 0; i < touching.size(); ++i)
    for (std::size_t j = i + 1; j < touching.size(); ++j) {
      const Elem yz = view.meet(touching[i], touching[j]);
      if (yz != zero && view.meet(x, yz) == zero)
        return ElemPair{touching[i], touching[j]};
    }
  return std::nullopt;
}

bool is_mu(const SublatticeView& view, Elem x) {
  return !mu_witness(view, x).has_value();
}

bool is_mu(const FiniteLattice& lattice, Elem x) { return is_mu(whole(lattice), x); }

bool is_mu_by_families(const SublatticeView& view, Elem x, int max_family) {
  require_member(view, x);
  const Elem zero = view.bottom();
  const auto members = view.elements();
  std::vector<Elem> family;
  bool ok = true;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (!ok) return;
    if (family.size() >= 2) {
      Elem meet = view.top();
      bool each_touches = true;
      for (Elem y : family) {
        meet = view.meet(meet, y);
        if (view.meet(x, y) == zero) each_touches = false;
      }
      if (meet != zero && each_touches && view.meet(x, meet) == zero) {
        ok = false;
        return;
      }
    }
    if (static_cast<int>(family.size()) == max_family) return;
    for (std::size_t i = from; i < members.size(); ++i) {
      family.push_back(members[i]);
      grow(i + 1);
      family.pop_back();
    }
  };
  grow(0);
  return ok;
}

bool mu_in_down(const FiniteLattice& lattice, Elem b, Elem x) {
  lattice.check_index(b);
  lattice.check_index(x);
  if (!lattice.leq(x, b))
    throw Error(ErrorCode::PreorderViolation,
                "'" + lattice.label(x) + "' is not below '" + lattice.label(b) + "'");
  return is_mu(down_view(lattice, b), x);
}

bool mu_in_up(const Quantale& frame, Elem b, Elem x) {
  require_frame(frame);
  const FiniteLattice& lattice = frame.lattice();
  lattice.check_index(b);
  lattice.check_index(x);
  if (!lattice.leq(b, x))
    throw Error(ErrorCode::PreorderViolation,
                "'" + lattice.label(x) + "' is not above '" + lattice.label(b) + "'");
  return is_mu(up_view(lattice, b), x);
}

std::optional<ElemPair> irreducible_witness(const SublatticeView& view, Elem x) {
  require_member(view, x);
  const Elem zero = view.bottom();
  std::vector<Elem> below;
  for (Elem y : view.elements())
    if (y != zero && view.leq(y, x)) below.push_back(y);
  for (std::size_t i = 0; i < below.size(); ++i)
    for (std::size_t j = i + 1; j < below.size(); ++j)
      if (view.meet(below[i], below[j]) == zero) return ElemPair{below[i], below[j]};
  return std::nullopt;
}

bool is_irreducible(const SublatticeView& view, Elem x) {
  return !irreducible_witness(view, x).has_value();
}

bool is_irreducible(const FiniteLattice& lattice, Elem x) {
  return is_irreducible(whole(lattice), x);
}

std::vector<Elem> mu_elements(const SublatticeView& view) {
  std::vector<Elem> out;
  for (Elem x : view.elements())
    if (is_mu(view, x)) out.push_back(x);
  return out;
}

std::vector<Elem> mu_elements(const FiniteLattice& lattice) {
  return mu_elements(whole(lattice));
}

Elem socle(const FiniteLattice& lattice) {
  const auto a = atoms(lattice);
  return lattice.join_all(a);
}

bool is_independent(const SublatticeView& view, std::span<const Elem> set) {
  if (set.empty()) throw Error(ErrorCode::EmptySet, "independence of an empty set");
  for (Elem x : set) require_member(view, x);
  for (std::size_t i = 0; i < set.size(); ++i) {
    Elem others = view.bottom();
    for (std::size_t j = 0; j < set.size(); ++j)
      if (j != i) others = view.join(others, set[j]);
    if (view.meet(set[i], others) != view.bottom()) return false;
  }
  return true;
}

bool is_independent(const FiniteLattice& lattice, std::span<const Elem> set) {
  return is_independent(whole(lattice), set);
}

std::vector<Elem> mu_complements(const SublatticeView& view, Elem x) {
  require_member(view, x);
  std::vector<Elem> out;
  for (Elem y : view.elements())
    if (view.meet(x, y) == view.bottom() && is_mu(view, view.join(x, y)))
      out.push_back(y);
  return out;
}

std::vector<Elem> mu_complements(const FiniteLattice& lattice, Elem x) {
  return mu_complements(whole(lattice), x);
}

Elem mu_complement_containing(const FiniteLattice& lattice, Elem x, Elem y) {
  lattice.check_index(x);
  lattice.check_index(y);
  require_modular(lattice);
  if (lattice.meet(x, y) != lattice.bottom())
    throw Error(ErrorCode::MeetNotZero,
                "'" + lattice.label(x) + "' ∧ '" + lattice.label(y) + "' ≠ 0");
  std::vector<Elem> candidates;
  for (Elem c = 0; c < lattice.size(); ++c)
    if (lattice.leq(x, c) && lattice.meet(y, c) == lattice.bottom())
      candidates.push_back(c);
  for (Elem c : candidates) {
    bool maximal = true;
    for (Elem d : candidates)
      if (lattice.lt(c, d)) maximal = false;
    if (!maximal) continue;
    if (!is_mu(lattice, lattice.join(y, c)))
      throw Error(ErrorCode::PostconditionFailed,
                  "'" + lattice.label(y) + "' ∨ '" + lattice.label(c) +
                      "' is not a μ-element");
    return c;
  }
  // x itself is a candidate, so some maximal candidate always exists.
  throw Error(ErrorCode::PostconditionFailed, "no maximal candidate");
}

std::optional<Elem> essentially_closed_witness(const SublatticeView& view, Elem x) {
  require_member(view, x);
  for (Elem b : view.elements())
    if (view.parent().lt(x, b) && is_essential(view.down(b), x)) return b;
  return std::nullopt;
}

bool is_essentially_closed(const SublatticeView& view, Elem x) {
  return !essentially_closed_witness(view, x).has_value();
}

bool is_essentially_closed(const FiniteLattice& lattice, Elem x) {
  return is_essentially_closed(whole(lattice), x);
}

std::optional<Elem> mu_closed_witness(const SublatticeView& view, Elem x) {
  require_member(view, x);
  for (Elem b : view.elements())
    if (view.parent().lt(x, b) && is_mu(view.down(b), x)) return b;
  return std::nullopt;
}

bool is_mu_closed(const SublatticeView& view, Elem x) {
  return !mu_closed_witness(view, x).has_value();
}

bool is_mu_closed(const FiniteLattice& lattice, Elem x) {
  return is_mu_closed(whole(lattice), x);
}

FastVerdict fast_mu_exponent(const FactoredModulus& modulus,
                             std::span<const int> exponents) {
  const auto& m = modulus.exponents;
  if (exponents.size() != m.size())
    throw Error(ErrorCode::ExponentOutOfRange,
                "vector of length " + std::to_string(exponents.size()) + " for " +
                    std::to_string(m.size()) + " primes");
  std::size_t below_bound = 0;
  bool some_at_bound = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > m[i])
      throw Error(ErrorCode::ExponentOutOfRange,
                  "exponent " + std::to_string(exponents[i]) + " outside [0, " +
                      std::to_string(m[i]) + "]");
    if (exponents[i] < m[i])
      ++below_bound;
    else
      some_at_bound = true;
  }
  return FastVerdict{below_bound == m.size(), !(below_bound >= 2 && some_at_bound)};
}

FastVerdict fast_mu_topology(const TopologySpec& spec, PointSet open) {
  bool listed = false;
  for (PointSet u : spec.opens) listed = listed || u == open;
  if (!listed)
    throw Error(ErrorCode::NotAnOpen, point_set_label(spec, open) + " is not open");
  bool dense = true;
  for (PointSet v : spec.opens)
    if (v != 0 && (v & open) == 0) dense = false;
  bool irreducible = true;
  for (PointSet v : spec.opens) {
    if (v == 0 || (v & ~open) != 0) continue;
    for (PointSet w : spec.opens)
      if (w != 0 && (w & ~open) == 0 && (v & w) == 0) irreducible = false;
  }
  return FastVerdict{dense, dense || irreducible};
}

bool fast_mu_modular(const FiniteLattice& lattice, Elem x) {
  lattice.check_index(x);
  require_modular(lattice);
  return is_essential(lattice, x) || is_irreducible(lattice, x);
}

KappaMap kappa(const Quantale& frame, Elem a) {
  require_frame(frame);
  const FiniteLattice& lattice = frame.lattice();
  lattice.check_index(a);
  std::vector<Elem> image(lattice.size());
  for (Elem x = 0; x < lattice.size(); ++x) image[x] = lattice.join(x, a);
  return KappaMap{up_view(lattice, a), std::move(image)};
}

std::vector<Elem> maximal_above_disjoint(const Quantale& frame, Elem a, Elem b) {
  require_frame(frame);
  const FiniteLattice& lattice = frame.lattice();
  lattice.check_index(a);
  lattice.check_index(b);
  const auto pc = pseudo_complement(lattice, a);
  if (!pc || *pc != b)
    throw Error(ErrorCode::NotPseudoComplement,
                "'" + lattice.label(b) + "' is not the pseudo-complement of '" +
                    lattice.label(a) + "'");
  std::vector<Elem> candidates;
  for (Elem c = 0; c < lattice.size(); ++c)
    if (lattice.leq(a, c) && lattice.meet(b, c) == lattice.bottom())
      candidates.push_back(c);
  std::vector<Elem> out;
  for (Elem c : candidates) {
    bool maximal = true;
    for (Elem d : candidates)
      if (lattice.lt(c, d)) maximal = false;
    if (!maximal) continue;
    if (!mu_in_down(lattice, c, a))
      throw Error(ErrorCode::PostconditionFailed,
                  "'" + lattice.label(a) + "' is not μ in '" + lattice.label(c) + "'↓");
    out.push_back(c);
  }
  return out;
}

MuReport analyze_element(const SublatticeView& view, Elem x) {
  MuReport r;
  r.element = x;
  r.essential_witness = essential_witness(view, x);
  r.mu_witness = mu_witness(view, x);
  r.irreducible_witness = irreducible_witness(view, x);
  r.essential = !r.essential_witness;
  r.mu = !r.mu_witness;
  r.irreducible = !r.irreducible_witness;
  if (x == view.bottom()) {
    r.atom_witness = x;
  } else {
    for (Elem c : view.elements())
      if (c != view.bottom() && view.parent().lt(c, x)) {
        r.atom_witness = c;
        break;
      }
  }
  r.atom = !r.atom_witness;
  return r;
}

MuReport analyze_element(const FiniteLattice& lattice, Elem x) {
  return analyze_element(whole(lattice), x);
}

std::vector<MuReport> analyze_all(const FiniteLattice& lattice, unsigned threads) {
  std::vector<MuReport> out(lattice.size());
  const SublatticeView view = whole(lattice);
  parallel_for(lattice.size(), threads,
               [&](std::size_t i) { out[i] = analyze_element(view, static_cast<Elem>(i)); });
  return out;
}

}  // namespace mulat
