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

#ifndef MULAT_CORPUS_HPP_
#define MULAT_CORPUS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mulat/builders.hpp"
#include "mulat/lattice.hpp"
#include "mulat/quantale.hpp"

namespace mulat {

/// One structure the suite runs checks against. Enumerated lattices that are
/// not distributive carry no multiplication; every lattice-only statement is
/// still checked on them.
struct Instance {
  std::string name;
  std::string family;
  FiniteLattice lattice;
  std::optional<Quantale> quantale = std::nullopt;
  std::optional<FactoredModulus> modulus = std::nullopt;
  std::vector<ExponentVector> exponents = {};  // per element, when modulus is set
  std::optional<TopologySpec> topology = std::nullopt;
  bool modular = false;
  bool distributive = false;

  bool is_frame() const { return quantale && quantale->is_frame(); }
};

Instance make_instance(std::string name, std::string family, FiniteLattice lattice);
Instance make_instance(std::string name, std::string family, Quantale quantale);
Instance make_instance(std::string name, const ExponentQuantale& ideals);
Instance make_instance(std::string name, std::string family, Quantale frame,
                       TopologySpec topology);

struct CorpusConfig {
  int powerset_max = 4;            // powerset frames on 1..k points
  std::uint64_t zn_min = 2;        // ideal quantales of Z_n, zn_min <= n <= zn_max
  std::uint64_t zn_max = 500;
  int preorder_points = 4;         // Alexandrov frames of every preorder
  bool topology_fixtures = true;   // hand-written finite topologies
  int enumerate_max = 6;           // enumerate_lattices(k), deduped; 0 = none
  int chain_max = 8;               // chains of length 1..k
  bool product_fixtures = true;    // M3 x 2 and 2 x 3
  bool m3_family = false;          // M3 x 2, M3 x 3, M3 x M3
  bool pid_fixtures = true;        // R[x]/(x^2 (x+1)(x+2))
  bool modular_only = false;       // drop non-modular instances
};

struct Corpus {
  CorpusConfig config;
  std::vector<std::shared_ptr<const Instance>> instances;
};

/// Deterministic: the same config always yields the same instances in the
/// same order. Every instance passed its constructor's validation.
Corpus build_corpus(const CorpusConfig& config);
Corpus default_corpus();
Corpus single_instance_corpus(Instance instance);

/// Every preorder (reflexive, transitive relation) on k labelled points.
std::vector<Relation> all_preorders(int k);

/// Finite topologies used as fixtures beyond the Alexandrov sweep.
std::vector<TopologySpec> topology_fixtures();

}  // namespace mulat

#endif  // MULAT_CORPUS_HPP_
