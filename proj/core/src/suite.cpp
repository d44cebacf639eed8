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

#include "mulat/suite.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <sstream>

#include "mulat/error.hpp"
#include "mulat/isomorphism.hpp"
#include "mulat/mu.hpp"
#include "mulat/parallel.hpp"

namespace mulat {

// ---------------------------------------------------------------------------
// Tables

InstanceTables::InstanceTables(const Instance& instance)
    : instance_(&instance),
      mu_(instance.lattice.size(), -1),
      essential_(instance.lattice.size(), -1),
      irreducible_(instance.lattice.size(), -1),
      mu_closed_(instance.lattice.size(), -1),
      ess_closed_(instance.lattice.size(), -1),
      mu_down_(instance.lattice.size()),
      ess_down_(instance.lattice.size()),
      mu_up_(instance.lattice.size()),
      ess_up_(instance.lattice.size()),
      pc_known_(instance.lattice.size(), 0),
      pc_(instance.lattice.size()) {}

namespace {

template <typename F>
bool cached(std::vector<std::int8_t>& cache, Elem x, F compute) {
  if (cache[x] < 0) cache[x] = compute() ? 1 : 0;
  return cache[x] == 1;
}

}  // namespace

bool InstanceTables::mu(Elem x) {
  return cached(mu_, x, [&] { return is_mu(lattice(), x); });
}

bool InstanceTables::essential(Elem x) {
  return cached(essential_, x, [&] { return is_essential(lattice(), x); });
}

bool InstanceTables::irreducible(Elem x) {
  return cached(irreducible_, x, [&] { return is_irreducible(lattice(), x); });
}

const std::vector<std::int8_t>& InstanceTables::relative(
    std::vector<std::vector<std::int8_t>>& cache, Elem anchor, bool up, bool mu) {
  auto& row = cache[anchor];
  if (row.empty()) {
    const FiniteLattice& l = lattice();
    const SublatticeView view = up ? up_view(l, anchor) : down_view(l, anchor);
    row.assign(l.size(), 2);
    for (Elem x : view.elements())
      row[x] = (mu ? is_mu(view, x) : is_essential(view, x)) ? 1 : 0;
  }
  return row;
}

namespace {

bool member_verdict(const std::vector<std::int8_t>& row, Elem x) {
  if (row[x] == 2) throw Error(ErrorCode::PreorderViolation, "element outside view");
  return row[x] == 1;
}

}  // namespace

bool InstanceTables::mu_down(Elem b, Elem x) {
  return member_verdict(relative(mu_down_, b, false, true), x);
}

bool InstanceTables::essential_down(Elem b, Elem x) {
  return member_verdict(relative(ess_down_, b, false, false), x);
}

bool InstanceTables::mu_up(Elem c, Elem x) {
  return member_verdict(relative(mu_up_, c, true, true), x);
}

bool InstanceTables::essential_up(Elem c, Elem x) {
  return member_verdict(relative(ess_up_, c, true, false), x);
}

bool InstanceTables::mu_closed(Elem x) {
  return cached(mu_closed_, x, [&] {
    const FiniteLattice& l = lattice();
    for (Elem b = 0; b < l.size(); ++b)
      if (l.lt(x, b) && mu_down(b, x)) return false;
    return true;
  });
}

bool InstanceTables::essentially_closed(Elem x) {
  return cached(ess_closed_, x, [&] {
    const FiniteLattice& l = lattice();
    for (Elem b = 0; b < l.size(); ++b)
      if (l.lt(x, b) && essential_down(b, x)) return false;
    return true;
  });
}

std::optional<Elem> InstanceTables::pseudo_complement(Elem x) {
  if (!pc_known_[x]) {
    pc_[x] = mulat::pseudo_complement(lattice(), x);
    pc_known_[x] = 1;
  }
  return pc_[x];
}

// ---------------------------------------------------------------------------
// Checks

namespace {

using Status = CheckOutcome::Status;

CheckOutcome pass(const InstanceTables& t) {
  return {Status::pass, t.lattice().size(), {}, {}};
}

CheckOutcome fail(const InstanceTables& t, std::vector<Elem> elements, std::string detail) {
  return {Status::fail, t.lattice().size(), std::move(elements), std::move(detail)};
}

std::string lbl(const InstanceTables& t, Elem x) { return "'" + t.lattice().label(x) + "'"; }

bool any(const Instance&) { return true; }
bool modular(const Instance& i) { return i.modular; }
bool distributive(const Instance& i) { return i.distributive; }
bool frame(const Instance& i) { return i.is_frame(); }

std::size_t n_of(const InstanceTables& t) { return t.lattice().size(); }

CheckOutcome essential_implies_mu(InstanceTables& t, const SuiteContext&) {
  for (Elem x = 0; x < n_of(t); ++x)
    if (t.essential(x) && !t.mu(x))
      return fail(t, {x}, lbl(t, x) + " is essential but not a mu-element");
  return pass(t);
}

CheckOutcome distinguished_mu(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  if (!t.mu(l.bottom())) return fail(t, {l.bottom()}, "bottom is not a mu-element");
  if (!t.mu(l.top())) return fail(t, {l.top()}, "top is not a mu-element");
  for (Elem a : atoms(l))
    if (!t.mu(a)) return fail(t, {a}, "atom " + lbl(t, a) + " is not a mu-element");
  for (Elem a = 0; a < l.size(); ++a)
    if (!t.mu_down(a, a)) return fail(t, {a}, lbl(t, a) + " is not mu in its own downset");
  const auto& q = t.instance().quantale;
  if (q && is_domain(*q))
    for (Elem x = 0; x < l.size(); ++x)
      if (!t.mu(x)) return fail(t, {x}, "domain element " + lbl(t, x) + " is not mu");
  if (is_local(l)) {
    const Elem m = maximal_elements(l).front();
    if (!t.mu(m)) return fail(t, {m}, "unique maximal " + lbl(t, m) + " is not mu");
  }
  return pass(t);
}

CheckOutcome pairwise_criterion(InstanceTables& t, const SuiteContext&) {
  const SublatticeView view = whole(t.lattice());
  for (Elem x = 0; x < n_of(t); ++x)
    if (is_mu_by_families(view, x, 4) != t.mu(x))
      return fail(t, {x}, "pairwise and family forms disagree on " + lbl(t, x));
  return pass(t);
}

CheckOutcome meet_of_two_mu(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  for (Elem a = 0; a < l.size(); ++a) {
    if (!t.mu(a)) continue;
    for (Elem b = a + 1; b < l.size(); ++b)
      if (t.mu(b) && !t.mu(l.meet(a, b)))
        return fail(t, {a, b}, "meet of " + lbl(t, a) + " and " + lbl(t, b) + " is not mu");
  }
  return pass(t);
}

CheckOutcome mu_down_transfer(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  for (Elem np = 0; np < l.size(); ++np) {
    if (!t.mu(np)) continue;
    for (Elem n = 0; n < l.size(); ++n)
      if (l.leq(n, np) && t.mu_down(np, n) && !t.mu(n))
        return fail(t, {n, np}, lbl(t, n) + " is mu below mu " + lbl(t, np) + " yet not mu");
  }
  return pass(t);
}

CheckOutcome mu_down_meets(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  const std::size_t n = l.size();
  std::vector<std::pair<Elem, Elem>> pairs;  // (a, b) with a ⩽_μ b↓
  for (Elem b = 0; b < n; ++b)
    for (Elem a = 0; a < n; ++a)
      if (l.leq(a, b) && t.mu_down(b, a)) pairs.emplace_back(a, b);
  for (const auto& [a1, b1] : pairs)
    for (const auto& [a2, b2] : pairs)
      if (!t.mu_down(l.meet(b1, b2), l.meet(a1, a2)))
        return fail(t, {a1, b1, a2, b2}, "meet of relative mu pairs is not relative mu");
  return pass(t);
}

CheckOutcome mu_restricts_down(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  for (Elem a = 0; a < l.size(); ++a) {
    if (!t.mu(a)) continue;
    for (Elem b = 0; b < l.size(); ++b)
      if (!t.mu_down(b, l.meet(a, b)))
        return fail(t, {a, b}, "meet with " + lbl(t, b) + " is not mu in its downset");
  }
  return pass(t);
}

CheckOutcome pseudo_complement_up(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  for (Elem a = 0; a < l.size(); ++a) {
    const auto b = t.pseudo_complement(a);
    if (!b) return fail(t, {a}, "frame element without pseudo-complement");
    for (Elem c = 0; c < l.size(); ++c)
      if (t.mu(c) && !t.mu_up(*b, l.join(*b, c)))
        return fail(t, {a, *b, c}, "join with the pseudo-complement is not mu in its upset");
  }
  return pass(t);
}

CheckOutcome up_interval(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  for (Elem c = 0; c < l.size(); ++c)
    for (Elem a = 0; a < l.size(); ++a) {
      if (!l.leq(c, a) || !t.mu_up(c, a)) continue;
      for (Elem d = 0; d < l.size(); ++d)
        if (l.leq(c, d) && l.leq(d, a) && !t.mu_up(d, a))
          return fail(t, {a, c, d}, "relative mu lost when raising the upset anchor");
    }
  return pass(t);
}

CheckOutcome injective_hom_contraction(InstanceTables& t, const SuiteContext& ctx) {
  const Quantale& source = *t.instance().quantale;
  for (const auto& target : ctx.hom_targets) {
    const Quantale& tq = *target->quantale;
    if (tq.size() < source.size()) continue;
    const auto homs = find_injective_homs(source, tq);
    if (homs.empty()) continue;
    std::vector<std::int8_t> target_mu(tq.size());
    for (Elem y = 0; y < tq.size(); ++y) target_mu[y] = is_mu(tq.lattice(), y) ? 1 : 0;
    for (const auto& hom : homs) {
      if (!is_quantale_hom(hom) || !is_injective(hom.lattice_hom()))
        return fail(t, {}, "search returned an invalid homomorphism into " + target->name);
      for (Elem x = 0; x < source.size(); ++x)
        if (target_mu[hom.map[x]] && !t.mu(x))
          return fail(t, {x}, "image of " + lbl(t, x) + " is mu in " + target->name +
                                  " but " + lbl(t, x) + " is not");
    }
  }
  return pass(t);
}

CheckOutcome kappa_regular(InstanceTables& t, const SuiteContext&) {
  const Quantale& q = *t.instance().quantale;
  const FiniteLattice& l = t.lattice();
  for (Elem a = 0; a < l.size(); ++a) {
    const KappaMap k = kappa(q, a);
    bool keeps_essential = true, keeps_mu = true;
    for (Elem x = 0; x < l.size(); ++x) {
      if (t.essential(x) && !t.essential_up(a, k.image[x])) keeps_essential = false;
      if (t.mu(x) && !t.mu_up(a, k.image[x])) keeps_mu = false;
    }
    const bool regular = is_regular(q, a);
    if (keeps_essential != regular || (keeps_essential && keeps_mu) != regular) {
      std::ostringstream os;
      os << "at " << lbl(t, a) << ": preserves essential " << keeps_essential
         << ", regular " << regular << ", preserves mu " << keeps_mu;
      return fail(t, {a}, os.str());
    }
  }
  return pass(t);
}

CheckOutcome socle_bounds(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  std::vector<Elem> mus;
  bool proper_mu = false;
  for (Elem x = 0; x < l.size(); ++x)
    if (t.mu(x)) {
      mus.push_back(x);
      if (x != l.top()) proper_mu = true;
    }
  const Elem soc = socle(l);
  const Elem floor = l.meet_all(mus);
  if (!l.leq(floor, soc)) return fail(t, {floor, soc}, "meet of mu-elements above the socle");
  if (!proper_mu && soc != l.top()) return fail(t, {soc}, "no proper mu-elements yet socle is not top");
  return pass(t);
}

CheckOutcome mu_complement_restriction(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b : mu_complements(l, a))
      for (Elem n = 0; n < l.size(); ++n) {
        if (!l.leq(a, n)) continue;
        const Elem c = l.meet(b, n);
        if (l.meet(a, c) != l.bottom() || !t.mu_down(n, l.join(a, c)))
          return fail(t, {a, b, n}, "restriction to the downset is not a mu-complement");
      }
  return pass(t);
}

CheckOutcome mu_complement_existence(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  bool proper_mu = false;
  for (Elem x = 0; x < l.size(); ++x) {
    if (x != l.top() && t.mu(x)) proper_mu = true;
    bool has = false;
    for (Elem y = 0; y < l.size() && !has; ++y)
      has = l.meet(x, y) == l.bottom() && t.mu(l.join(x, y));
    if (!has) return fail(t, {x}, lbl(t, x) + " has no mu-complement");
    if (const auto pc = t.pseudo_complement(x); pc && !t.mu(l.join(x, *pc)))
      return fail(t, {x, *pc}, "pseudo-complement of " + lbl(t, x) + " is not a mu-complement");
  }
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y) {
      if (l.meet(x, y) != l.bottom()) continue;
      try {
        const Elem yp = mu_complement_containing(l, x, y);
        if (!l.leq(x, yp) || l.meet(y, yp) != l.bottom() || !t.mu(l.join(y, yp)))
          return fail(t, {x, y, yp}, "mu-complement containing x is invalid");
      } catch (const Error& e) {
        return fail(t, {x, y}, e.what());
      }
    }
  if (!proper_mu)
    for (Elem x = 0; x < l.size(); ++x)
      if (complements_of(l, x).empty())
        return fail(t, {x}, "no proper mu-elements yet " + lbl(t, x) + " has no complement");
  return pass(t);
}

bool is_pseudo_complement_of_something(InstanceTables& t, Elem x) {
  for (Elem y = 0; y < n_of(t); ++y)
    if (t.pseudo_complement(y) == x) return true;
  return false;
}

CheckOutcome muclosed_pseudo_complement(InstanceTables& t, const SuiteContext&) {
  for (Elem x = 0; x < n_of(t); ++x)
    if (t.mu_closed(x) && !is_pseudo_complement_of_something(t, x))
      return fail(t, {x}, lbl(t, x) + " is mu-closed but no pseudo-complement");
  return pass(t);
}

// The weaker reading: x is maximal among the elements disjoint from some y.
CheckOutcome muclosed_maximal_disjoint(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  for (Elem x = 0; x < l.size(); ++x) {
    if (!t.mu_closed(x)) continue;
    bool found = false;
    for (Elem y = 0; y < l.size() && !found; ++y) {
      if (l.meet(x, y) != l.bottom()) continue;
      found = true;
      for (Elem z = 0; z < l.size() && found; ++z)
        if (l.lt(x, z) && l.meet(z, y) == l.bottom()) found = false;
    }
    if (!found)
      return fail(t, {x}, lbl(t, x) + " is mu-closed but maximal disjoint from nothing");
  }
  return pass(t);
}

CheckOutcome muclosed_upset(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  for (Elem a = 0; a < l.size(); ++a) {
    if (a == l.bottom() || !t.mu_closed(a)) continue;
    for (Elem b = 0; b < l.size(); ++b)
      if (b != l.bottom() && l.leq(a, b) && t.mu(b) && !t.mu_up(a, b))
        return fail(t, {a, b}, "mu " + lbl(t, b) + " is not mu above mu-closed " + lbl(t, a));
  }
  return pass(t);
}

CheckOutcome modular_characterization(InstanceTables& t, const SuiteContext&) {
  for (Elem x = 0; x < n_of(t); ++x)
    if (t.mu(x) != (t.essential(x) || t.irreducible(x)))
      return fail(t, {x}, "mu verdict of " + lbl(t, x) + " differs from essential-or-irreducible");
  return pass(t);
}

CheckOutcome muclosed_characterization(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  if (!t.mu_closed(l.top()) || !t.essentially_closed(l.top()))
    return fail(t, {l.top()}, "top is not closed");
  for (Elem x = 0; x < l.size(); ++x) {
    if (x == l.top()) continue;
    if (t.mu_closed(x) != (t.essentially_closed(x) && !t.irreducible(x)))
      return fail(t, {x}, "mu-closed verdict of " + lbl(t, x) +
                              " differs from essentially-closed-and-not-irreducible");
  }
  return pass(t);
}

CheckOutcome muclosed_transitivity(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  for (Elem b = 0; b < l.size(); ++b) {
    if (!t.mu_closed(b)) continue;
    for (Elem a = 0; a < l.size(); ++a) {
      if (!l.leq(a, b)) continue;
      bool closed_in_b = true;
      for (Elem c = 0; c < l.size() && closed_in_b; ++c)
        if (l.lt(a, c) && l.leq(c, b) && t.mu_down(c, a)) closed_in_b = false;
      if (closed_in_b && !t.mu_closed(a))
        return fail(t, {a, b}, lbl(t, a) + " is mu-closed in a mu-closed downset but not in L");
    }
  }
  return pass(t);
}

CheckOutcome independent_join(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  std::vector<Elem> nonzero;
  for (Elem x = 0; x < l.size(); ++x)
    if (x != l.bottom()) nonzero.push_back(x);
  std::vector<Elem> set;
  auto maximal = [&] {
    std::vector<Elem> grown = set;
    for (Elem z : nonzero) {
      if (std::find(set.begin(), set.end(), z) != set.end()) continue;
      grown.push_back(z);
      const bool ok = is_independent(l, grown);
      grown.pop_back();
      if (ok) return false;
    }
    return true;
  };
  std::optional<CheckOutcome> bad;
  auto visit = [&] {
    if (!is_independent(l, set)) return;
    const Elem j = l.join_all(set);
    const bool expected = maximal() || (set.size() == 1 && t.irreducible(set[0]));
    if (t.mu(j) != expected) bad = fail(t, set, "mu verdict of the join disagrees");
  };
  const std::size_t m = nonzero.size();
  for (std::size_t i = 0; i < m && !bad; ++i) {
    set = {nonzero[i]};
    visit();
    for (std::size_t j = i + 1; j < m && !bad; ++j) {
      set = {nonzero[i], nonzero[j]};
      visit();
      for (std::size_t k = j + 1; k < m && !bad; ++k) {
        set = {nonzero[i], nonzero[j], nonzero[k]};
        visit();
      }
    }
  }
  return bad ? *bad : pass(t);
}

CheckOutcome exponent_fastpath(InstanceTables& t, const SuiteContext&) {
  const Instance& inst = t.instance();
  for (Elem x = 0; x < n_of(t); ++x) {
    const FastVerdict fast = fast_mu_exponent(*inst.modulus, inst.exponents[x]);
    if (fast.essential != t.essential(x) || fast.mu != t.mu(x))
      return fail(t, {x}, "closed form disagrees with brute force on " + lbl(t, x));
  }
  return pass(t);
}

CheckOutcome topology_fastpath(InstanceTables& t, const SuiteContext&) {
  const TopologySpec& spec = *t.instance().topology;
  const auto opens = canonical_opens(spec);
  for (Elem x = 0; x < n_of(t); ++x) {
    const FastVerdict fast = fast_mu_topology(spec, opens[x]);
    if (fast.essential != t.essential(x) || fast.mu != t.mu(x))
      return fail(t, {x}, "dense-or-irreducible disagrees with brute force on " + lbl(t, x));
  }
  return pass(t);
}

CheckOutcome powerset_mu_set(InstanceTables& t, const SuiteContext&) {
  const FiniteLattice& l = t.lattice();
  for (Elem x = 0; x < l.size(); ++x) {
    const bool expected = std::popcount(x) <= 1 || x == l.top();
    if (t.mu(x) != expected)
      return fail(t, {x}, lbl(t, x) + (expected ? " should" : " should not") + " be mu");
  }
  return pass(t);
}

std::vector<Check> make_checks() {
  return {
      {"essential-implies-mu", "every essential element is a mu-element", any,
       essential_implies_mu},
      {"distinguished-mu",
       "bottom, top and atoms are mu; a is mu in its own downset; every element of a "
       "domain is mu; the maximal element of a local quantale is mu",
       any, distinguished_mu},
      {"pairwise-criterion",
       "the pairwise test agrees with the family definition (families up to 4, "
       "lattices up to 16 elements)",
       [](const Instance& i) { return i.lattice.size() <= 16; }, pairwise_criterion},
      {"meet-of-two-mu", "the meet of two mu-elements is a mu-element", any, meet_of_two_mu},
      {"mu-down-transfer", "n mu in the downset of a mu-element n' makes n a mu-element",
       any, mu_down_transfer},
      {"mu-down-meets",
       "a1 mu in b1-down and a2 mu in b2-down give a1 meet a2 mu in (b1 meet b2)-down", any,
       mu_down_meets},
      {"mu-restricts-down", "for mu a and any b, a meet b is mu in b-down", any,
       mu_restricts_down},
      {"pseudo-complement-up",
       "in a frame, b the pseudo-complement of a and c mu give b join c mu in b-up", frame,
       pseudo_complement_up},
      {"up-interval", "in a frame, a mu in c-up and c <= d <= a give a mu in d-up", frame,
       up_interval},
      {"injective-hom-contraction",
       "an injective quantale homomorphism reflects mu-elements on its image",
       [](const Instance& i) { return i.quantale && i.lattice.size() <= 6; },
       injective_hom_contraction},
      {"kappa-regular",
       "in a frame, x -> x join a preserves essential elements iff a is regular iff it "
       "preserves essential and mu-elements",
       frame, kappa_regular},
      {"socle-bounds",
       "the meet of all mu-elements lies below the socle; without proper mu-elements the "
       "socle is top",
       any, socle_bounds},
      {"mu-complement-restriction",
       "in a distributive lattice, b a mu-complement of a and a <= n give b meet n a "
       "mu-complement of a in n-down",
       distributive, mu_complement_restriction},
      {"mu-complement-existence",
       "in a modular lattice every element has a mu-complement, x disjoint from y lies in a "
       "mu-complement of y, every pseudo-complement is a mu-complement, and without proper "
       "mu-elements the lattice is complemented",
       modular, mu_complement_existence},
      {"muclosed-pseudo-complement",
       "in a modular lattice every mu-closed element is a pseudo-complement", modular,
       muclosed_pseudo_complement},
      {"muclosed-maximal-disjoint",
       "in a modular lattice every mu-closed element is maximal among the elements disjoint "
       "from some element",
       modular, muclosed_maximal_disjoint},
      {"muclosed-upset",
       "in a frame, for nonzero mu-closed a and mu b >= a, b is mu in a-up", frame,
       muclosed_upset},
      {"modular-characterization",
       "in a modular lattice, mu iff essential or irreducible", modular,
       modular_characterization},
      {"muclosed-characterization",
       "in a modular lattice, for x below top, mu-closed iff essentially closed and not "
       "irreducible; top is both",
       modular, muclosed_characterization},
      {"muclosed-transitivity",
       "in a modular lattice, a mu-closed in b-down with b mu-closed makes a mu-closed",
       modular, muclosed_transitivity},
      {"independent-join",
       "in a modular lattice, the join of an independent set (up to 3 members) is mu iff the "
       "set is maximal independent or a single irreducible element",
       modular, independent_join},
      {"exponent-fastpath", "the exponent closed form matches brute force",
       [](const Instance& i) { return i.modulus.has_value(); }, exponent_fastpath},
      {"topology-fastpath", "dense-or-irreducible matches brute force on open sets",
       [](const Instance& i) { return i.topology.has_value(); }, topology_fastpath},
      {"powerset-mu-set", "the mu-elements of a powerset are the empty set, singletons and X",
       [](const Instance& i) { return i.family == "powerset"; }, powerset_mu_set},
  };
}

}  // namespace

const std::vector<Check>& registered_checks() {
  static const std::vector<Check> checks = make_checks();
  return checks;
}

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& c : registered_checks()) out.push_back(c.name);
  return out;
}

const Check& find_check(const std::string& name) {
  for (const auto& c : registered_checks())
    if (c.name == name) return c;
  throw Error(ErrorCode::UnknownCheckName, "no check named '" + name + "'");
}

// ---------------------------------------------------------------------------
// Running

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckReport& c) { return c.passed; });
}

const CheckReport* SuiteReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

SuiteContext make_context(const Corpus& corpus, std::span<const Check* const> checks) {
  SuiteContext ctx;
  const bool wants_homs = std::any_of(checks.begin(), checks.end(), [](const Check* c) {
    return c->name == "injective-hom-contraction";
  });
  if (!wants_homs) return ctx;
  std::vector<std::uint64_t> hashes;
  for (const auto& inst : corpus.instances) {
    if (!inst->quantale || inst->lattice.size() > ctx.hom_target_max) continue;
    const std::uint64_t h = invariant_hash(inst->lattice);
    bool seen = false;
    for (std::size_t i = 0; i < ctx.hom_targets.size() && !seen; ++i)
      seen = hashes[i] == h && are_isomorphic(*ctx.hom_targets[i]->quantale, *inst->quantale);
    if (seen) continue;
    hashes.push_back(h);
    ctx.hom_targets.push_back(inst);
  }
  return ctx;
}

namespace {

struct Cell {
  CheckOutcome outcome;
  double seconds = 0.0;
};

SuiteReport run_selected(const Corpus& corpus, std::span<const Check* const> checks,
                         unsigned threads) {
  if (corpus.instances.empty())
    throw Error(ErrorCode::EmptySet, "corpus has no instances");
  const auto start = std::chrono::steady_clock::now();
  const SuiteContext ctx = make_context(corpus, checks);
  const std::size_t n = corpus.instances.size();
  std::vector<std::vector<Cell>> cells(n, std::vector<Cell>(checks.size()));

  parallel_for(n, threads, [&](std::size_t i) {
    const Instance& inst = *corpus.instances[i];
    InstanceTables tables(inst);
    for (std::size_t c = 0; c < checks.size(); ++c) {
      Cell& cell = cells[i][c];
      if (!checks[c]->applies(inst)) {
        cell.outcome.status = Status::skipped;
        continue;
      }
      const auto t0 = std::chrono::steady_clock::now();
      try {
        cell.outcome = checks[c]->run(tables, ctx);
      } catch (const Error& e) {
        cell.outcome = {Status::fail, inst.lattice.size(), {}, e.what()};
      }
      cell.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  });

  SuiteReport report;
  report.instance_count = n;
  for (std::size_t c = 0; c < checks.size(); ++c) {
    CheckReport r;
    r.name = checks[c]->name;
    r.claim = checks[c]->claim;
    for (std::size_t i = 0; i < n; ++i) {
      const Cell& cell = cells[i][c];
      r.wall_seconds += cell.seconds;
      if (cell.outcome.status == Status::skipped) {
        ++r.skipped_by_hypothesis;
        continue;
      }
      ++r.instances_tested;
      r.elements_tested += cell.outcome.elements_tested;
      if (cell.outcome.status == Status::fail && r.passed) {
        r.passed = false;
        Counterexample ce{corpus.instances[i], cell.outcome.elements, {}, cell.outcome.detail};
        for (Elem e : ce.elements) ce.element_labels.push_back(ce.instance->lattice.label(e));
        r.counterexample = std::move(ce);
      }
    }
    report.checks.push_back(std::move(r));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

SuiteReport run_suite(const Corpus& corpus, std::span<const std::string> filter,
                      unsigned threads) {
  std::vector<const Check*> selected;
  if (filter.empty()) {
    for (const auto& c : registered_checks()) selected.push_back(&c);
  } else {
    for (const auto& name : filter) selected.push_back(&find_check(name));
  }
  return run_selected(corpus, selected, threads);
}

SuiteReport run_checks(const Corpus& corpus, std::span<const Check> checks, unsigned threads) {
  std::vector<const Check*> selected;
  for (const auto& c : checks) selected.push_back(&c);
  return run_selected(corpus, selected, threads);
}

bool replay(const Check& check, const Counterexample& counterexample,
            const SuiteContext& context) {
  if (!counterexample.instance) return false;
  InstanceTables tables(*counterexample.instance);
  CheckOutcome outcome;
  try {
    outcome = check.run(tables, context);
  } catch (const Error& e) {
    outcome = {Status::fail, 0, {}, e.what()};
  }
  return outcome.status == Status::fail && outcome.elements == counterexample.elements;
}

}  // namespace mulat
