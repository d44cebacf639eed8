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

#include "mulat/cli/commands.hpp"

#include <bit>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "mulat/enumerate.hpp"
#include "mulat/error.hpp"
#include "mulat/mu.hpp"
#include "mulat/parallel.hpp"
#include "mulat/suite.hpp"

namespace mulat::cli {

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw Error(ErrorCode::InvalidDocument, "range '" + text + "' is not of the form a..b");
  try {
    const std::uint64_t a = std::stoull(text.substr(0, dots));
    const std::uint64_t b = std::stoull(text.substr(dots + 2));
    if (a < 2 || b < a) throw std::invalid_argument("order");
    return {a, b};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidDocument, "range '" + text + "' needs 2 <= a <= b");
  }
}

std::string join_labels(const FiniteLattice& l, const std::vector<Elem>& xs) {
  std::string s;
  for (Elem x : xs) {
    if (!s.empty()) s += ' ';
    s += l.label(x);
  }
  return s.empty() ? "-" : s;
}

// Fast-path verdicts where the instance supports one.
std::optional<FastVerdict> fast_verdict(const Instance& inst, Elem x) {
  if (inst.modulus) return fast_mu_exponent(*inst.modulus, inst.exponents[x]);
  if (inst.topology) return fast_mu_topology(*inst.topology, canonical_opens(*inst.topology)[x]);
  if (inst.family == "powerset") {
    TopologySpec spec;
    const int k = std::bit_width(static_cast<std::uint64_t>(inst.lattice.size())) - 1;
    for (int i = 0; i < k; ++i) spec.points.push_back(std::to_string(i + 1));
    for (PointSet s = 0; s < inst.lattice.size(); ++s) spec.opens.push_back(s);
    return fast_mu_topology(spec, x);
  }
  if (inst.modular)
    return FastVerdict{is_essential(inst.lattice, x), fast_mu_modular(inst.lattice, x)};
  return std::nullopt;
}

std::string notes(const FiniteLattice& l, const MuReport& r) {
  std::vector<std::string> parts;
  if (r.essential_witness) parts.push_back("meets 0 with " + l.label(*r.essential_witness));
  if (r.mu_witness)
    parts.push_back("mu fails on " + l.label(r.mu_witness->first) + ", " +
                    l.label(r.mu_witness->second));
  if (r.irreducible_witness)
    parts.push_back("disjoint below: " + l.label(r.irreducible_witness->first) + ", " +
                    l.label(r.irreducible_witness->second));
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s;
}

nlohmann::json report_json(const SuiteReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json j{{"name", c.name},
                     {"claim", c.claim},
                     {"passed", c.passed},
                     {"instances_tested", c.instances_tested},
                     {"skipped_by_hypothesis", c.skipped_by_hypothesis},
                     {"elements_tested", c.elements_tested},
                     {"wall_seconds", c.wall_seconds}};
    if (c.counterexample) {
      const auto& ce = *c.counterexample;
      const Quantale* q = ce.instance->quantale ? &*ce.instance->quantale : nullptr;
      j["counterexample"] = {
          {"instance", ce.instance->name},
          {"elements", ce.element_labels},
          {"detail", ce.detail},
          {"lattice", nlohmann::json::parse(save(explicit_document(ce.instance->lattice, q)))}};
    }
    checks.push_back(std::move(j));
  }
  return {{"instances", report.instance_count},
          {"passed", report.passed()},
          {"checks", checks}};
}

void print_report(const SuiteReport& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << "  instances=" << c.instances_tested
        << " skipped=" << c.skipped_by_hypothesis << " elements=" << c.elements_tested
        << " time=" << std::fixed << std::setprecision(3) << c.wall_seconds << "s\n";
    if (c.counterexample) {
      const auto& ce = *c.counterexample;
      out << "  counterexample in " << ce.instance->name << ":";
      for (const auto& s : ce.element_labels) out << ' ' << s;
      out << "  (" << ce.detail << ")\n";
    }
  }
}

}  // namespace

LatticeDocument resolve(const Source& s) {
  const int count = s.zn.has_value() + s.powerset.has_value() + s.chain.has_value() +
                    s.pid.has_value() + s.input.has_value();
  if (count != 1)
    throw Error(ErrorCode::InvalidDocument,
                "give exactly one of --zn, --powerset, --chain, --pid, --input");
  if (s.zn) return zn_document(*s.zn);
  if (s.powerset) return powerset_document(*s.powerset);
  if (s.chain) return chain_document(*s.chain);
  if (s.pid) return pid_document(*s.pid);
  return load_file(*s.input);
}

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  std::optional<Instance> loaded;
  try {
    loaded = instantiate(resolve(o.source));
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitInput;
  }
  const Instance& inst = *loaded;
  const FiniteLattice& l = inst.lattice;
  const auto reports = analyze_all(l, o.threads);

  std::vector<std::optional<FastVerdict>> fast(l.size());
  if (o.fast || o.cross_check)
    for (Elem x = 0; x < l.size(); ++x) fast[x] = fast_verdict(inst, x);
  const bool have_fast = l.size() > 0 && fast[0].has_value();
  if (o.fast && !have_fast) err << "no fast path for this structure; using brute force\n";

  std::size_t width = 7;
  for (const auto& s : l.labels()) width = std::max(width, s.size());
  out << inst.name << ": " << l.size() << " elements, modular " << yn(inst.modular)
      << ", distributive " << yn(inst.distributive) << '\n';
  out << std::left << std::setw(static_cast<int>(width) + 2) << "element"
      << "essential  mu   irreducible  atom  witnesses\n";
  std::vector<Elem> mus;
  for (Elem x = 0; x < l.size(); ++x) {
    const MuReport& r = reports[x];
    bool ess = r.essential, mu = r.mu;
    if (o.fast && have_fast) {
      ess = fast[x]->essential;
      mu = fast[x]->mu;
    }
    if (mu) mus.push_back(x);
    out << std::left << std::setw(static_cast<int>(width) + 2) << l.label(x) << std::setw(11)
        << yn(ess) << std::setw(5) << yn(mu) << std::setw(13) << yn(r.irreducible)
        << std::setw(6) << yn(r.atom) << notes(l, r) << '\n';
  }
  out << "socle: " << l.label(socle(l)) << '\n';
  out << "atoms: " << join_labels(l, atoms(l)) << '\n';
  out << "maximal: " << join_labels(l, maximal_elements(l)) << '\n';
  out << "mu-set: " << join_labels(l, mus) << '\n';

  if (o.cross_check) {
    if (!have_fast) {
      err << "cross-check: no fast path for this structure\n";
      return kExitInput;
    }
    std::size_t bad = 0;
    for (Elem x = 0; x < l.size(); ++x)
      if (fast[x]->essential != reports[x].essential || fast[x]->mu != reports[x].mu) {
        ++bad;
        out << "cross-check mismatch at " << l.label(x) << '\n';
      }
    out << "cross-check: " << (l.size() - bad) << " of " << l.size() << " elements agree\n";
    if (bad) return kExitVerification;
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  if (o.list_checks) {
    for (const auto& c : registered_checks()) out << c.name << "  " << c.claim << '\n';
    return kExitOk;
  }
  SuiteReport total;
  try {
    for (const auto& name : o.checks) find_check(name);
    const bool corpus_wanted = o.default_corpus || o.zn_range || o.enumerate || !o.checks.empty();
    if (o.examples) {
      SuiteReport ex = run_examples();
      total.instance_count += ex.instance_count;
      for (auto& c : ex.checks) total.checks.push_back(std::move(c));
    }
    if (corpus_wanted || !o.examples) {
      CorpusConfig config;
      if (!o.default_corpus && (o.zn_range || o.enumerate)) {
        config.powerset_max = 0;
        config.zn_max = 0;
        config.preorder_points = 0;
        config.topology_fixtures = false;
        config.enumerate_max = 0;
        config.chain_max = 0;
        config.product_fixtures = false;
        config.pid_fixtures = false;
        if (o.zn_range) std::tie(config.zn_min, config.zn_max) = parse_range(*o.zn_range);
        if (o.enumerate) config.enumerate_max = *o.enumerate;
      }
      const Corpus corpus = build_corpus(config);
      SuiteReport r = run_suite(corpus, o.checks, o.threads);
      total.instance_count += r.instance_count;
      for (auto& c : r.checks) total.checks.push_back(std::move(c));
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitInput;
  }
  print_report(total, out);
  out << (total.passed() ? "all checks passed" : "some checks failed") << '\n';
  if (o.report) {
    std::ofstream f(*o.report);
    if (!f) {
      err << "cannot write '" << *o.report << "'\n";
      return kExitInput;
    }
    f << report_json(total).dump(2) << '\n';
  }
  return total.passed() ? kExitOk : kExitVerification;
}

std::string hasse_dot(const Instance& inst, unsigned threads) {
  const FiniteLattice& l = inst.lattice;
  const auto reports = analyze_all(l, threads);
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (Elem x = 0; x < l.size(); ++x) {
    const MuReport& r = reports[x];
    os << "  n" << x << " [label=" << std::quoted(l.label(x)) << ", mu=\"" << r.mu
       << "\", essential=\"" << r.essential << "\", irreducible=\"" << r.irreducible << '"'
       << (r.mu ? ", peripheries=2" : "") << "];\n";
  }
  for (const auto& [a, b] : l.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

int cmd_hasse(const HasseOptions& o, std::ostream& out, std::ostream& err) {
  std::string dot;
  try {
    dot = hasse_dot(instantiate(resolve(o.source)), o.threads);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitInput;
  }
  if (!o.output) {
    out << dot;
    return kExitOk;
  }
  std::ofstream f(*o.output);
  if (!f || !(f << dot)) {
    err << "cannot write '" << *o.output << "'\n";
    return kExitInput;
  }
  return kExitOk;
}

int cmd_enumerate(const EnumerateOptions& o, std::ostream& out, std::ostream& err) {
  if (o.filter != "all" && o.filter != "modular" && o.filter != "distributive") {
    err << "unknown filter '" << o.filter << "'\n";
    return kExitInput;
  }
  if (o.format != "counts" && o.format != "documents") {
    err << "unknown format '" << o.format << "'\n";
    return kExitInput;
  }
  std::vector<std::size_t> counts(static_cast<std::size_t>(std::max(o.max_size, 0)) + 1);
  nlohmann::json docs = nlohmann::json::array();
  try {
    for_each_lattice(o.max_size, o.dedupe ? Dedupe::isomorphism : Dedupe::none,
                     [&](const FiniteLattice& l) {
                       if (o.filter == "modular" && !is_modular(l)) return;
                       if (o.filter == "distributive" && !is_distributive(l)) return;
                       ++counts[l.size()];
                       if (o.format == "documents")
                         docs.push_back(nlohmann::json::parse(save(explicit_document(l))));
                     });
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitInput;
  }
  if (o.format == "documents") {
    out << docs.dump(2) << '\n';
  } else {
    std::size_t total = 0;
    for (std::size_t k = 1; k < counts.size(); ++k) {
      out << "size " << k << ": " << counts[k] << '\n';
      total += counts[k];
    }
    out << "total: " << total << '\n';
  }
  return kExitOk;
}

int cmd_scan_zn(const ScanOptions& o, std::ostream& out, std::ostream& err) {
  std::uint64_t a = 0, b = 0;
  try {
    std::tie(a, b) = parse_range(o.range);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitInput;
  }
  struct Row {
    std::size_t ideals = 0, mu = 0, essential = 0, irreducible = 0;
  };
  std::vector<Row> rows(b - a + 1);
  parallel_for(rows.size(), o.threads, [&](std::size_t i) {
    const auto q = zn_ideals(a + i);
    const FiniteLattice& l = q.lattice();
    Row& r = rows[i];
    r.ideals = l.size();
    for (Elem x = 0; x < l.size(); ++x) {
      r.mu += is_mu(l, x);
      r.essential += is_essential(l, x);
      r.irreducible += is_irreducible(l, x);
    }
  });
  out << "n,ideals,mu,essential,irreducible\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    out << a + i << ',' << rows[i].ideals << ',' << rows[i].mu << ',' << rows[i].essential
        << ',' << rows[i].irreducible << '\n';
  return kExitOk;
}

}  // namespace mulat::cli
