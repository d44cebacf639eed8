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

#include <gtest/gtest.h>

#include <algorithm>

#include "mulat/builders.hpp"
#include "mulat/error.hpp"
#include "mulat/mu.hpp"
#include "mulat/quantale.hpp"
#include "mulat/view.hpp"
#include "oracles.hpp"

namespace {

using namespace mulat;

struct Named {
  const FiniteLattice& l;
  Elem operator()(const std::string& s) const {
    const auto x = l.find(s);
    EXPECT_TRUE(x.has_value()) << s;
    return x.value_or(0);
  }
};

std::vector<std::string> labels_of(const FiniteLattice& l, std::span<const Elem> xs) {
  std::vector<std::string> out;
  for (Elem x : xs) out.push_back(l.label(x));
  std::sort(out.begin(), out.end());
  return out;
}

using Labels = std::vector<std::string>;

Labels sorted(Labels v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Essential, Examples) {
  const auto z = zn_ideals(12);
  const auto& l = z.lattice();
  Named at{l};
  EXPECT_TRUE(is_essential(l, l.top()));
  EXPECT_FALSE(is_essential(l, at("(3)")));
  EXPECT_EQ(essential_witness(whole(l), at("(3)")), at("(4)"));
  EXPECT_TRUE(is_essential(l, at("(2)")));
}

TEST(Mu, Z12AndZ30) {
  const auto z12 = zn_ideals(12);
  EXPECT_TRUE(is_mu(z12.lattice(), *z12.lattice().find("(3)")));
  const auto z30 = zn_ideals(30);
  const auto& l = z30.lattice();
  Named at{l};
  EXPECT_FALSE(is_mu(l, at("(2)")));
  const auto w = mu_witness(whole(l), at("(2)"));
  ASSERT_TRUE(w.has_value());
  // the witness must re-verify; (3), (5) is one valid choice
  EXPECT_NE(l.meet(w->first, w->second), l.bottom());
  EXPECT_NE(l.meet(at("(2)"), w->first), l.bottom());
  EXPECT_NE(l.meet(at("(2)"), w->second), l.bottom());
  EXPECT_EQ(l.meet(at("(2)"), l.meet(w->first, w->second)), l.bottom());
  const Elem y = at("(3)"), zz = at("(5)");
  EXPECT_EQ(l.meet(at("(2)"), l.meet(y, zz)), l.bottom());
  EXPECT_NE(l.meet(y, zz), l.bottom());
}

TEST(Mu, PowersetPair) {
  const auto q = powerset_frame(3);
  const auto& l = q.lattice();
  Named at{l};
  EXPECT_FALSE(is_mu(l, at("{1,2}")));
  const auto w = mu_witness(whole(l), at("{1,2}"));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(sorted({l.label(w->first), l.label(w->second)}), (Labels{"{1,3}", "{2,3}"}));
  EXPECT_TRUE(is_mu(l, l.bottom()));
}

TEST(Mu, RelativeForms) {
  const auto q = powerset_frame(3);
  const auto& l = q.lattice();
  Named at{l};
  for (Elem x = 0; x < l.size(); ++x) EXPECT_TRUE(mu_in_down(l, x, x));
  EXPECT_TRUE(mu_in_down(l, at("{1,2}"), at("{1}")));
  EXPECT_TRUE(mu_in_up(q, at("{2}"), at("{2,3}")));
  EXPECT_FALSE(is_mu(l, at("{2,3}")));
}

TEST(Mu, RelativeErrors) {
  const auto q = powerset_frame(3);
  const auto& l = q.lattice();
  Named at{l};
  try {
    mu_in_down(l, at("{1}"), at("{2}"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreorderViolation);
  }
  const auto z = zn_ideals(12);
  try {
    mu_in_up(z.quantale(), z.lattice().bottom(), z.lattice().top());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAFrame);
  }
}

TEST(Irreducible, Examples) {
  const auto z900 = zn_ideals(900);
  const auto& l = z900.lattice();
  Named at{l};
  EXPECT_FALSE(is_irreducible(l, at("(60)")));
  const auto w = irreducible_witness(whole(l), at("(60)"));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(l.meet(w->first, w->second), l.bottom());
  EXPECT_EQ(l.meet(at("(180)"), at("(300)")), l.bottom());
  EXPECT_TRUE(l.leq(at("(180)"), at("(60)")));
  EXPECT_TRUE(l.leq(at("(300)"), at("(60)")));
  const auto z12 = zn_ideals(12);
  EXPECT_TRUE(is_irreducible(z12.lattice(), *z12.lattice().find("(3)")));
  for (Elem a : atoms(l)) EXPECT_TRUE(is_irreducible(l, a));
  EXPECT_TRUE(is_irreducible(l, l.bottom()));
}

TEST(MuElements, Examples) {
  const auto q = powerset_frame(3);
  EXPECT_EQ(labels_of(q.lattice(), mu_elements(q.lattice())),
            (Labels{"X", "{1}", "{2}", "{3}", "∅"}));
  const auto z = zn_ideals(12);
  EXPECT_EQ(mu_elements(z.lattice()).size(), 6u);
  EXPECT_EQ(mu_elements(chain(2).lattice()).size(), 2u);
}

TEST(Socle, Examples) {
  EXPECT_EQ(powerset_frame(3).lattice().label(socle(powerset_frame(3).lattice())), "X");
  const auto z = zn_ideals(12);
  EXPECT_EQ(z.lattice().label(socle(z.lattice())), "(2)");
  EXPECT_EQ(socle(chain(3).lattice()), 1u);
}

TEST(Independent, Examples) {
  const auto z = zn_ideals(12);
  const auto& l = z.lattice();
  Named at{l};
  const Elem single[] = {at("(3)")};
  EXPECT_TRUE(is_independent(l, single));
  const Elem pair[] = {at("(4)"), at("(6)")};
  EXPECT_TRUE(is_independent(l, pair));
  const auto q = powerset_frame(3);
  Named ps{q.lattice()};
  const Elem overlap[] = {ps("{1}"), ps("{1,2}")};
  EXPECT_FALSE(is_independent(q.lattice(), overlap));
  try {
    is_independent(l, std::span<const Elem>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySet);
  }
}

TEST(MuComplements, Examples) {
  const auto z = zn_ideals(12);
  const auto& l = z.lattice();
  Named at{l};
  // (4) is an atom, so the zero ideal qualifies as well
  EXPECT_EQ(labels_of(l, mu_complements(l, at("(4)"))), (Labels{"(12)", "(3)", "(6)"}));
  EXPECT_EQ(mu_complements(l, l.top()), std::vector<Elem>{l.bottom()});
  const auto q = powerset_frame(3);
  EXPECT_EQ(labels_of(q.lattice(), mu_complements(q.lattice(), *q.lattice().find("{1}"))),
            (Labels{"{2,3}", "∅"}));
}

TEST(MuComplementContaining, Examples) {
  const auto z = zn_ideals(12);
  const auto& l = z.lattice();
  Named at{l};
  EXPECT_EQ(mu_complement_containing(l, at("(3)"), at("(4)")), at("(3)"));
  EXPECT_EQ(mu_complement_containing(l, l.bottom(), l.bottom()), l.top());
  const auto d = m3();
  const Elem y = mu_complement_containing(d, 0, 1);
  EXPECT_TRUE(y == 2 || y == 3);
  EXPECT_TRUE(is_mu(d, d.join(1, y)));
}

TEST(MuComplementContaining, Errors) {
  try {
    mu_complement_containing(n5(), 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotModular);
  }
  const auto z = zn_ideals(12);
  Named at{z.lattice()};
  try {
    mu_complement_containing(z.lattice(), at("(2)"), at("(4)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MeetNotZero);
  }
}

TEST(Closedness, Examples) {
  const auto q = powerset_frame(3);
  const auto& l = q.lattice();
  Named at{l};
  EXPECT_TRUE(is_mu_closed(l, l.top()));
  EXPECT_TRUE(is_essentially_closed(l, l.top()));
  EXPECT_FALSE(is_mu_closed(l, at("{1}")));
  EXPECT_EQ(mu_closed_witness(whole(l), at("{1}")).has_value(), true);
  const auto b = *mu_closed_witness(whole(l), at("{1}"));
  EXPECT_TRUE(mu_in_down(l, b, at("{1}")));
  EXPECT_TRUE(is_mu_closed(l, at("{1,2}")));
  EXPECT_TRUE(is_essentially_closed(l, at("{1,2}")));
  EXPECT_FALSE(is_irreducible(l, at("{1,2}")));
}

TEST(FastExponent, Examples) {
  const auto z12 = zn_ideals(12);
  const std::vector<int> three{0, 1};
  EXPECT_EQ(fast_mu_exponent(z12.modulus(), three), (FastVerdict{false, true}));
  const auto z900 = FactoredModulus::of_integer(900);
  const std::vector<int> sixty{2, 1, 1};
  EXPECT_FALSE(fast_mu_exponent(z900, sixty).mu);
  const auto z180 = FactoredModulus::of_integer(180);
  const std::vector<int> five{0, 0, 1};
  EXPECT_FALSE(fast_mu_exponent(z180, five).mu);
  const std::vector<int> bad{3, 0};
  try {
    fast_mu_exponent(z12.modulus(), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ExponentOutOfRange);
  }
}

TEST(FastExponent, PidQuotientMuSet) {
  const auto q = ideal_quantale({{"x", "x+1", "x+2"}, {2, 1, 1}});
  Labels fast;
  for (Elem x = 0; x < q.size(); ++x)
    if (fast_mu_exponent(q.modulus(), q.exponents(x)).mu) fast.push_back(q.lattice().label(x));
  const Labels expect = sorted({"(0)", "(x)", "(x^2(x+1))", "(x^2(x+2))", "((x+1)(x+2))",
                                "(x(x+1)(x+2))", "(1)"});
  EXPECT_EQ(sorted(fast), expect);
  EXPECT_EQ(labels_of(q.lattice(), mu_elements(q.lattice())), expect);
}

TEST(FastTopology, Examples) {
  const TopologySpec discrete{{"1", "2", "3"}, {0, 1, 2, 3, 4, 5, 6, 7}};
  EXPECT_EQ(fast_mu_topology(discrete, 7), (FastVerdict{true, true}));
  EXPECT_EQ(fast_mu_topology(discrete, 3), (FastVerdict{false, false}));
  const TopologySpec sierpinski{{"1", "2"}, {0, 2, 3}};
  EXPECT_TRUE(fast_mu_topology(sierpinski, 2).essential);
  EXPECT_TRUE(fast_mu_topology(sierpinski, 2).mu);
  try {
    fast_mu_topology(sierpinski, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnOpen);
  }
}

TEST(FastModular, Examples) {
  const auto z12 = zn_ideals(12);
  EXPECT_TRUE(fast_mu_modular(z12.lattice(), *z12.lattice().find("(3)")));
  const auto z30 = zn_ideals(30);
  EXPECT_FALSE(fast_mu_modular(z30.lattice(), *z30.lattice().find("(2)")));
  EXPECT_TRUE(fast_mu_modular(m3(), 1));
  try {
    fast_mu_modular(n5(), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotModular);
  }
}

TEST(Kappa, Examples) {
  const auto q = powerset_frame(2);
  const auto id = kappa(q, q.lattice().bottom());
  for (Elem x = 0; x < q.size(); ++x) EXPECT_EQ(id.image[x], x);
  const auto top = kappa(q, q.lattice().top());
  for (Elem x = 0; x < q.size(); ++x) EXPECT_EQ(top.image[x], q.lattice().top());
  const auto c = chain(3);
  const auto k = kappa(c, 1);
  EXPECT_EQ(k.image[1], k.codomain.bottom());
  EXPECT_TRUE(is_essential(c.lattice(), 1));
  EXPECT_FALSE(is_essential(k.codomain, k.image[1]));
  EXPECT_FALSE(is_regular(c, 1));
}

TEST(MaximalAboveDisjoint, Examples) {
  const auto q = powerset_frame(3);
  const auto& l = q.lattice();
  Named at{l};
  EXPECT_EQ(maximal_above_disjoint(q, at("{1}"), at("{2,3}")), std::vector<Elem>{at("{1}")});
  EXPECT_TRUE(mu_in_down(l, at("{1}"), at("{1}")));
  EXPECT_EQ(maximal_above_disjoint(q, l.top(), l.bottom()), std::vector<Elem>{l.top()});
  const auto c = chain(3);
  EXPECT_EQ(maximal_above_disjoint(c, 1, 0), std::vector<Elem>{2});
  EXPECT_TRUE(mu_in_down(c.lattice(), 2, 1));
  try {
    maximal_above_disjoint(q, at("{1}"), at("{2}"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPseudoComplement);
  }
}

TEST(Analyze, WitnessesReverify) {
  const auto z = zn_ideals(360);
  const auto& l = z.lattice();
  for (const auto& r : analyze_all(l, 3)) {
    EXPECT_EQ(r.mu, !r.mu_witness.has_value());
    EXPECT_EQ(r.essential, !r.essential_witness.has_value());
    EXPECT_EQ(r.irreducible, !r.irreducible_witness.has_value());
    if (r.mu_witness) {
      const auto [y, w] = *r.mu_witness;
      EXPECT_EQ(l.meet(r.element, l.meet(y, w)), l.bottom());
    }
  }
}

// Library verdicts against the definition-level oracle on fixed fixtures.
void expect_matches_oracle(const FiniteLattice& l) {
  const auto p = oracle::Poset::of(l);
  for (Elem x = 0; x < l.size(); ++x) {
    EXPECT_EQ(is_essential(l, x), oracle::essential(p, x)) << l.label(x);
    EXPECT_EQ(is_mu(l, x), oracle::mu(p, x)) << l.label(x);
    EXPECT_EQ(is_irreducible(l, x), oracle::irreducible(p, x)) << l.label(x);
    EXPECT_EQ(is_mu_closed(l, x), oracle::mu_closed(p, x)) << l.label(x);
    EXPECT_EQ(is_essentially_closed(l, x), oracle::essentially_closed(p, x)) << l.label(x);
    EXPECT_EQ(mu_complements(l, x), oracle::mu_complements(p, x)) << l.label(x);
  }
}

TEST(Oracle, Fixtures) {
  expect_matches_oracle(m3());
  expect_matches_oracle(n5());
  expect_matches_oracle(powerset_frame(4).lattice());
  expect_matches_oracle(zn_ideals(360).lattice());
  expect_matches_oracle(product(m3(), chain(2).lattice()));
  expect_matches_oracle(product(n5(), chain(3).lattice()));
}

TEST(Oracle, DivisorForm) {
  for (std::uint64_t n = 2; n <= 400; ++n) {
    const auto z = zn_ideals(n);
    const auto& l = z.lattice();
    for (Elem x = 0; x < l.size(); ++x) {
      const std::string& s = l.label(x);
      const auto d = std::stoull(s.substr(1, s.size() - 2));
      ASSERT_EQ(is_essential(l, x), oracle::zn::essential(n, d)) << n << " " << s;
      ASSERT_EQ(is_mu(l, x), oracle::zn::mu(n, d)) << n << " " << s;
      ASSERT_EQ(is_irreducible(l, x), oracle::zn::irreducible(n, d)) << n << " " << s;
    }
  }
}

TEST(Oracle, FamiliesAgreeWithPairs) {
  for (const auto& l : {m3(), n5(), powerset_frame(3).lattice(), zn_ideals(180).lattice()})
    for (Elem x = 0; x < l.size(); ++x)
      EXPECT_EQ(is_mu(l, x), is_mu_by_families(whole(l), x, 4)) << l.label(x);
}

}  // namespace
