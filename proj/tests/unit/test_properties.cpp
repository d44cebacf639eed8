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

// Randomized checks against the reference oracles. Every generator is seeded
// from gen::kSeed so failures reproduce.

#include <gtest/gtest.h>

#include "generators.hpp"
#include "mulat/builders.hpp"
#include "mulat/isomorphism.hpp"
#include "mulat/mu.hpp"
#include "mulat/quantale.hpp"
#include "mulat/view.hpp"
#include "oracles.hpp"

namespace {

using namespace mulat;

constexpr int kRounds = 120;

TEST(Property, TablesAndLawsMatchOracle) {
  gen::Rng rng(gen::kSeed);
  for (int round = 0; round < kRounds; ++round) {
    const auto l = gen::random_lattice(rng);
    const auto p = oracle::Poset::of(l);
    ASSERT_TRUE(p.is_lattice());
    for (Elem x = 0; x < l.size(); ++x)
      for (Elem y = 0; y < l.size(); ++y) {
        ASSERT_EQ(l.meet(x, y), p.meet(x, y));
        ASSERT_EQ(l.join(x, y), p.join(x, y));
      }
    EXPECT_EQ(is_modular(l), oracle::modular(p));
    EXPECT_EQ(is_distributive(l), oracle::distributive(p));
  }
}

TEST(Property, PredicatesMatchOracle) {
  gen::Rng rng(gen::kSeed + 1);
  for (int round = 0; round < kRounds; ++round) {
    const auto l = gen::random_lattice(rng);
    const auto p = oracle::Poset::of(l);
    for (Elem x = 0; x < l.size(); ++x) {
      ASSERT_EQ(is_essential(l, x), oracle::essential(p, x)) << round;
      ASSERT_EQ(is_mu(l, x), oracle::mu(p, x)) << round;
      ASSERT_EQ(is_irreducible(l, x), oracle::irreducible(p, x)) << round;
      ASSERT_EQ(is_mu_closed(l, x), oracle::mu_closed(p, x)) << round;
      ASSERT_EQ(is_essentially_closed(l, x), oracle::essentially_closed(p, x)) << round;
      ASSERT_EQ(pseudo_complement(l, x), oracle::pseudo_complement(p, x)) << round;
      ASSERT_EQ(mu_complements(l, x), oracle::mu_complements(p, x)) << round;
    }
  }
}

TEST(Property, RelativePredicatesMatchOracle) {
  gen::Rng rng(gen::kSeed + 2);
  for (int round = 0; round < kRounds; ++round) {
    const auto l = gen::random_lattice(rng);
    const auto p = oracle::Poset::of(l);
    const auto b = static_cast<Elem>(gen::uniform(rng, 0, static_cast<int>(l.size()) - 1));
    const auto down = down_view(l, b);
    const auto up = up_view(l, b);
    for (Elem x : down.elements()) {
      ASSERT_EQ(is_mu(down, x), oracle::mu(p, l.bottom(), b, x));
      ASSERT_EQ(is_essential(down, x), oracle::essential(p, l.bottom(), b, x));
      ASSERT_EQ(mu_in_down(l, b, x), oracle::mu(p, l.bottom(), b, x));
    }
    for (Elem x : up.elements()) {
      ASSERT_EQ(is_mu(up, x), oracle::mu(p, b, l.top(), x));
      ASSERT_EQ(is_essential(up, x), oracle::essential(p, b, l.top(), x));
      ASSERT_EQ(is_irreducible(up, x), oracle::irreducible(p, b, x));
    }
  }
}

TEST(Property, PairwiseCriterionEqualsFamilies) {
  gen::Rng rng(gen::kSeed + 3);
  for (int round = 0; round < kRounds; ++round) {
    const auto l = gen::random_lattice(rng, 12);
    for (Elem x = 0; x < l.size(); ++x)
      ASSERT_EQ(is_mu(l, x), is_mu_by_families(whole(l), x, 4));
  }
}

TEST(Property, EssentialOrIrreducibleImpliesMu) {
  gen::Rng rng(gen::kSeed + 4);
  for (int round = 0; round < kRounds; ++round) {
    const auto l = gen::random_lattice(rng);
    for (Elem x = 0; x < l.size(); ++x)
      if (is_essential(l, x) || is_irreducible(l, x)) ASSERT_TRUE(is_mu(l, x));
    if (is_modular(l))
      for (Elem x = 0; x < l.size(); ++x)
        ASSERT_EQ(is_mu(l, x), is_essential(l, x) || is_irreducible(l, x));
  }
}

TEST(Property, VerdictsAreIsomorphismInvariant) {
  gen::Rng rng(gen::kSeed + 5);
  for (int round = 0; round < kRounds; ++round) {
    const auto l = gen::random_lattice(rng);
    const auto perm = gen::random_permutation(rng, l.size());
    const auto s = gen::shuffled(l, perm);
    EXPECT_EQ(invariant_hash(l), invariant_hash(s));
    const auto iso = find_isomorphism(l, s);
    ASSERT_TRUE(iso.has_value());
    for (Elem x = 0; x < l.size(); ++x) {
      ASSERT_EQ(is_mu(l, x), is_mu(s, (*iso)[x]));
      ASSERT_EQ(is_essential(l, x), is_essential(s, (*iso)[x]));
      ASSERT_EQ(is_mu(l, x), is_mu(s, perm[x]));
    }
  }
}

TEST(Property, AnalyzeIsThreadInvariant) {
  gen::Rng rng(gen::kSeed + 6);
  for (int round = 0; round < 30; ++round) {
    const auto l = gen::random_lattice(rng, 32);
    const auto one = analyze_all(l, 1);
    const auto many = analyze_all(l, 5);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      EXPECT_EQ(one[i].mu, many[i].mu);
      EXPECT_EQ(one[i].mu_witness, many[i].mu_witness);
      EXPECT_EQ(one[i].essential_witness, many[i].essential_witness);
      EXPECT_EQ(one[i].irreducible_witness, many[i].irreducible_witness);
    }
  }
}

TEST(Property, ExponentFastPathMatchesDivisorOracle) {
  gen::Rng rng(gen::kSeed + 7);
  for (int round = 0; round < kRounds; ++round) {
    const auto n = static_cast<std::uint64_t>(gen::uniform(rng, 2, 5000));
    const auto z = zn_ideals(n);
    for (Elem x = 0; x < z.size(); ++x) {
      const std::string& s = z.lattice().label(x);
      const auto d = std::stoull(s.substr(1, s.size() - 2));
      const auto v = fast_mu_exponent(z.modulus(), z.exponents(x));
      ASSERT_EQ(v.essential, oracle::zn::essential(n, d)) << n << " " << s;
      ASSERT_EQ(v.mu, oracle::zn::mu(n, d)) << n << " " << s;
    }
  }
}

TEST(Property, TopologyFastPathMatchesSetOracle) {
  gen::Rng rng(gen::kSeed + 8);
  for (int round = 0; round < kRounds; ++round) {
    const int k = gen::uniform(rng, 1, 5);
    const auto frame = alexandrov_frame(gen::random_preorder(rng, k));
    const auto& spec = frame.topology;
    const auto opens = canonical_opens(spec);
    for (Elem x = 0; x < opens.size(); ++x) {
      const auto u = opens[x];
      const auto v = fast_mu_topology(spec, u);
      ASSERT_EQ(v.essential, oracle::opens::dense(opens, u));
      ASSERT_EQ(v.mu, oracle::opens::mu(opens, 0, spec.full(), u));
      ASSERT_EQ(is_mu(frame.frame.lattice(), x), v.mu);
      ASSERT_EQ(is_irreducible(frame.frame.lattice(), x), oracle::opens::irreducible(opens, u));
    }
  }
}

TEST(Property, AnnihilatorLaws) {
  gen::Rng rng(gen::kSeed + 9);
  for (int round = 0; round < kRounds; ++round) {
    const bool frame = round % 2 == 0;
    const Quantale q =
        frame ? alexandrov_frame(gen::random_preorder(rng, gen::uniform(rng, 1, 4))).frame
              : zn_ideals(static_cast<std::uint64_t>(gen::uniform(rng, 2, 3000))).quantale();
    const auto& l = q.lattice();
    for (Elem a = 0; a < l.size(); ++a) {
      const Elem aa = annihilator(q, a);
      ASSERT_TRUE(l.leq(a, annihilator(q, aa)));
      if (frame) ASSERT_EQ(aa, pseudo_complement(l, a));
      for (Elem b = 0; b < l.size(); ++b)
        if (l.leq(a, b)) ASSERT_TRUE(l.leq(annihilator(q, b), aa));
    }
  }
}

TEST(Property, MuComplementContainingIsMaximal) {
  gen::Rng rng(gen::kSeed + 10);
  for (int round = 0; round < 60; ++round) {
    const auto l = round % 3 == 0
                       ? product(m3(), chain(gen::uniform(rng, 2, 3)).lattice())
                       : zn_ideals(static_cast<std::uint64_t>(gen::uniform(rng, 2, 2000))).lattice();
    const auto p = oracle::Poset::of(l);
    const auto x = static_cast<Elem>(gen::uniform(rng, 0, static_cast<int>(l.size()) - 1));
    for (Elem y = 0; y < l.size(); ++y) {
      if (l.meet(x, y) != l.bottom()) continue;
      const Elem c = mu_complement_containing(l, x, y);
      ASSERT_TRUE(l.leq(x, c));
      ASSERT_EQ(l.meet(y, c), l.bottom());
      for (Elem z = 0; z < l.size(); ++z)
        if (z != c && l.leq(c, z)) ASSERT_NE(l.meet(y, z), l.bottom());
      ASSERT_TRUE(oracle::mu(p, l.join(y, c)));
    }
  }
}

}  // namespace
