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

#ifndef MULAT_SUITE_HPP_
#define MULAT_SUITE_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mulat/corpus.hpp"

namespace mulat {

/// Lazily computed per-instance tables shared by all checks on one instance.
/// Not thread-safe; the suite gives each worker its own.
class InstanceTables {
 public:
  explicit InstanceTables(const Instance& instance);

  const Instance& instance() const { return *instance_; }
  const FiniteLattice& lattice() const { return instance_->lattice; }

  bool mu(Elem x);
  bool essential(Elem x);
  bool irreducible(Elem x);
  /// x ⩽_μ b↓; requires x <= b.
  bool mu_down(Elem b, Elem x);
  /// x essential in b↓; requires x <= b.
  bool essential_down(Elem b, Elem x);
  /// x ⩽_μ c↑ in a frame; requires c <= x.
  bool mu_up(Elem c, Elem x);
  bool essential_up(Elem c, Elem x);
  bool mu_closed(Elem x);
  bool essentially_closed(Elem x);
  std::optional<Elem> pseudo_complement(Elem x);

 private:
  const std::vector<std::int8_t>& relative(std::vector<std::vector<std::int8_t>>& cache,
                                           Elem anchor, bool up, bool mu);

  const Instance* instance_;
  std::vector<std::int8_t> mu_, essential_, irreducible_, mu_closed_, ess_closed_;
  std::vector<std::vector<std::int8_t>> mu_down_, ess_down_, mu_up_, ess_up_;
  std::vector<std::int8_t> pc_known_;
  std::vector<std::optional<Elem>> pc_;
};

/// Injective-homomorphism targets are shared across instances.
struct SuiteContext {
  std::vector<std::shared_ptr<const Instance>> hom_targets;
  std::size_t hom_source_max = 6;
  std::size_t hom_target_max = 12;
};

struct CheckOutcome {
  enum class Status { pass, fail, skipped };
  Status status = Status::pass;
  std::size_t elements_tested = 0;
  std::vector<Elem> elements;  // counterexample, on failure
  std::string detail;
};

struct Check {
  std::string name;
  std::string claim;  // the statement being verified
  std::function<bool(const Instance&)> applies;
  std::function<CheckOutcome(InstanceTables&, const SuiteContext&)> run;
};

struct Counterexample {
  std::shared_ptr<const Instance> instance;
  std::vector<Elem> elements;
  std::vector<std::string> element_labels;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::string claim;
  std::size_t instances_tested = 0;
  std::size_t skipped_by_hypothesis = 0;
  std::size_t elements_tested = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  double wall_seconds = 0.0;
};

struct SuiteReport {
  std::vector<CheckReport> checks;
  std::size_t instance_count = 0;
  double wall_seconds = 0.0;

  bool passed() const;
  const CheckReport* find(const std::string& name) const;
};

/// The registered invariants, in report order.
const std::vector<Check>& registered_checks();
std::vector<std::string> check_names();
/// Throws UnknownCheckName.
const Check& find_check(const std::string& name);

SuiteContext make_context(const Corpus& corpus, std::span<const Check* const> checks);

/// Runs the selected checks (all when `filter` is empty) over every instance.
/// Instances are distributed over `threads` workers; the report depends only
/// on the corpus and the selection. Throws UnknownCheckName, EmptySet for an
/// empty corpus.
SuiteReport run_suite(const Corpus& corpus, std::span<const std::string> filter = {},
                      unsigned threads = 1);
SuiteReport run_checks(const Corpus& corpus, std::span<const Check> checks,
                       unsigned threads = 1);

/// Re-runs `check` on the counterexample's instance and reports whether the
/// same failure (same elements) is reproduced.
bool replay(const Check& check, const Counterexample& counterexample,
            const SuiteContext& context = {});

/// Every concrete example and negative regression, one report entry each.
SuiteReport run_examples();

}  // namespace mulat

#endif  // MULAT_SUITE_HPP_
