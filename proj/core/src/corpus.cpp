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

#include "mulat/corpus.hpp"

#include "mulat/enumerate.hpp"

namespace mulat {

namespace {

void classify(Instance& inst) {
  inst.distributive = is_distributive(inst.lattice);
  inst.modular = inst.distributive || is_modular(inst.lattice);
}

}  // namespace

Instance make_instance(std::string name, std::string family, FiniteLattice lattice) {
  Instance inst{std::move(name), std::move(family), std::move(lattice)};
  classify(inst);
  if (inst.distributive) inst.quantale = frame_from(inst.lattice);
  return inst;
}

Instance make_instance(std::string name, std::string family, Quantale quantale) {
  Instance inst{std::move(name), std::move(family), quantale.lattice()};
  inst.quantale = std::move(quantale);
  classify(inst);
  return inst;
}

Instance make_instance(std::string name, const ExponentQuantale& ideals) {
  Instance inst = make_instance(std::move(name), "ideals", ideals.quantale());
  inst.modulus = ideals.modulus();
  for (Elem x = 0; x < ideals.size(); ++x) inst.exponents.push_back(ideals.exponents(x));
  return inst;
}

Instance make_instance(std::string name, std::string family, Quantale frame,
                       TopologySpec topology) {
  Instance inst = make_instance(std::move(name), std::move(family), std::move(frame));
  inst.topology = std::move(topology);
  return inst;
}

std::vector<Relation> all_preorders(int k) {
  std::vector<std::pair<Elem, Elem>> off_diagonal;
  for (Elem i = 0; i < static_cast<Elem>(k); ++i)
    for (Elem j = 0; j < static_cast<Elem>(k); ++j)
      if (i != j) off_diagonal.emplace_back(i, j);
  std::vector<Relation> out;
  const std::uint64_t subsets = std::uint64_t{1} << off_diagonal.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Relation r = Relation::identity(static_cast<std::size_t>(k));
    for (std::size_t b = 0; b < off_diagonal.size(); ++b)
      if (mask >> b & 1u) r.set(off_diagonal[b].first, off_diagonal[b].second);
    if (r.is_transitive()) out.push_back(std::move(r));
  }
  return out;
}

std::vector<TopologySpec> topology_fixtures() {
  std::vector<TopologySpec> out;
  // Sierpinski space.
  out.push_back({{"1", "2"}, {0b00, 0b01, 0b11}});
  // Nested chain of opens.
  out.push_back({{"1", "2", "3"}, {0b000, 0b001, 0b011, 0b111}});
  // Two disjoint open points and their union below X.
  out.push_back({{"1", "2", "3"}, {0b000, 0b001, 0b010, 0b011, 0b111}});
  // Particular point topology at 1.
  out.push_back({{"1", "2", "3"}, {0b000, 0b001, 0b011, 0b101, 0b111}});
  // Indiscrete space.
  out.push_back({{"1", "2", "3"}, {0b000, 0b111}});
  // Excluded point topology at 3.
  out.push_back({{"1", "2", "3", "4"},
                 {0b0000, 0b0001, 0b0010, 0b0011, 0b1111}});
  // Two irreducible blocks.
  out.push_back({{"1", "2", "3", "4"},
                 {0b0000, 0b0001, 0b0011, 0b0100, 0b1100, 0b0101, 0b0111,
                  0b1101, 0b1111}});
  return out;
}

Corpus build_corpus(const CorpusConfig& config) {
  Corpus corpus{config, {}};
  auto add = [&](Instance inst) {
    if (config.modular_only && !inst.modular) return;
    corpus.instances.push_back(std::make_shared<const Instance>(std::move(inst)));
  };

  for (int k = 1; k <= config.powerset_max; ++k)
    add(make_instance("powerset" + std::to_string(k), "powerset", powerset_frame(k)));

  for (std::uint64_t n = std::max<std::uint64_t>(config.zn_min, 2); n <= config.zn_max; ++n)
    add(make_instance("Z" + std::to_string(n), zn_ideals(n)));

  if (config.pid_fixtures) {
    FactoredModulus mod{{"x", "x+1", "x+2"}, {2, 1, 1}};
    add(make_instance("R[x]/(x^2(x+1)(x+2))", ideal_quantale(mod)));
  }

  for (int k = 1; k <= config.preorder_points; ++k) {
    const auto preorders = all_preorders(k);
    for (std::size_t i = 0; i < preorders.size(); ++i) {
      auto frame = alexandrov_frame(preorders[i]);
      add(make_instance("preorder" + std::to_string(k) + "#" + std::to_string(i),
                        "alexandrov", std::move(frame.frame), std::move(frame.topology)));
    }
  }

  if (config.topology_fixtures) {
    const auto fixtures = topology_fixtures();
    for (std::size_t i = 0; i < fixtures.size(); ++i)
      add(make_instance("topology#" + std::to_string(i), "topology",
                        topology_frame(fixtures[i]), fixtures[i]));
  }

  if (config.enumerate_max > 0) {
    std::size_t index = 0;
    for_each_lattice(config.enumerate_max, Dedupe::isomorphism,
                     [&](const FiniteLattice& l) {
                       add(make_instance("lattice" + std::to_string(l.size()) + "#" +
                                             std::to_string(index++),
                                         "enumerated", l));
                     });
  }

  for (int k = 1; k <= config.chain_max; ++k)
    add(make_instance("chain" + std::to_string(k), "chain", chain(k)));

  if (config.product_fixtures) {
    add(make_instance("M3x2", "product", product(m3(), chain(2).lattice())));
    add(make_instance("2x3", "product", product(chain(2).lattice(), chain(3).lattice())));
  }
  if (config.m3_family) {
    if (!config.product_fixtures)
      add(make_instance("M3x2", "product", product(m3(), chain(2).lattice())));
    add(make_instance("M3x3", "product", product(m3(), chain(3).lattice())));
    add(make_instance("M3xM3", "product", product(m3(), m3())));
  }
  return corpus;
}

Corpus default_corpus() { return build_corpus(CorpusConfig{}); }

Corpus single_instance_corpus(Instance instance) {
  Corpus corpus;
  corpus.config.powerset_max = 0;
  corpus.config.zn_max = 0;
  corpus.config.preorder_points = 0;
  corpus.config.topology_fixtures = false;
  corpus.config.enumerate_max = 0;
  corpus.config.chain_max = 0;
  corpus.config.product_fixtures = false;
  corpus.config.pid_fixtures = false;
  corpus.instances.push_back(std::make_shared<const Instance>(std::move(instance)));
  return corpus;
}

}  // namespace mulat
