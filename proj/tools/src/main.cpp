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

#include <CLI11.hpp>
#include <iostream>

#include "mulat/cli/commands.hpp"

namespace {

void add_source(CLI::App* cmd, mulat::cli::Source& s) {
  cmd->add_option("--zn", s.zn, "ideals of Z_n");
  cmd->add_option("--powerset", s.powerset, "powerset frame on k points");
  cmd->add_option("--chain", s.chain, "chain with k elements");
  cmd->add_option("--pid", s.pid, "ideals of a PID quotient, e.g. \"x^2 (x+1) (x+2)\"");
  cmd->add_option("--input", s.input, "lattice document (JSON)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace mulat::cli;
  CLI::App app{"mu-element analysis for finite lattices and quantales"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "per-element essential / mu / irreducible report");
  add_source(a, analyze.source);
  a->add_flag("--fast", analyze.fast, "use closed forms where available");
  a->add_flag("--cross-check", analyze.cross_check, "compare closed forms with brute force");
  a->add_option("--threads", analyze.threads)->check(CLI::PositiveNumber);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "run the invariant checks and worked examples");
  v->add_flag("--examples", verify.examples, "worked examples and negative regressions");
  v->add_flag("--default-corpus", verify.default_corpus, "the default corpus");
  v->add_option("--zn-range", verify.zn_range, "ideals of Z_n for n in a..b");
  v->add_option("--enumerate", verify.enumerate, "all lattices up to this size");
  v->add_option("--check", verify.checks, "restrict to named checks (repeatable)");
  v->add_option("--report", verify.report, "write a JSON report");
  v->add_option("--threads", verify.threads)->check(CLI::PositiveNumber);
  v->add_flag("--list-checks", verify.list_checks, "list check names and exit");

  HasseOptions hasse;
  auto* h = app.add_subcommand("hasse", "cover diagram in DOT");
  add_source(h, hasse.source);
  h->add_option("--output,-o", hasse.output, "output path (default: stdout)");
  h->add_option("--threads", hasse.threads)->check(CLI::PositiveNumber);

  EnumerateOptions enumerate;
  auto* e = app.add_subcommand("enumerate", "lattices up to a size");
  e->add_option("--max-size", enumerate.max_size);
  e->add_flag("--dedupe,!--no-dedupe", enumerate.dedupe, "one lattice per isomorphism class");
  e->add_option("--filter", enumerate.filter, "all | modular | distributive");
  e->add_option("--format", enumerate.format, "counts | documents");

  ScanOptions scan;
  auto* s = app.add_subcommand("scan-zn", "CSV of mu / essential / irreducible counts per n");
  s->add_option("--range", scan.range, "a..b");
  s->add_option("--threads", scan.threads)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*a) return cmd_analyze(analyze, std::cout, std::cerr);
  if (*v) return cmd_verify(verify, std::cout, std::cerr);
  if (*h) return cmd_hasse(hasse, std::cout, std::cerr);
  if (*e) return cmd_enumerate(enumerate, std::cout, std::cerr);
  return cmd_scan_zn(scan, std::cout, std::cerr);
}
