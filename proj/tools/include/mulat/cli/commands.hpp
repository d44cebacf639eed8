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

#ifndef MULAT_CLI_COMMANDS_HPP_
#define MULAT_CLI_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mulat/cli/document.hpp"

namespace mulat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitVerification = 3;

/// Exactly one source must be set.
struct Source {
  std::optional<std::uint64_t> zn;
  std::optional<int> powerset;
  std::optional<int> chain;
  std::optional<std::string> pid;
  std::optional<std::string> input;
};

/// Throws InvalidDocument when zero or several sources are set.
LatticeDocument resolve(const Source& source);

struct AnalyzeOptions {
  Source source;
  bool fast = false;
  bool cross_check = false;
  unsigned threads = 1;
};

struct VerifyOptions {
  bool examples = false;
  bool default_corpus = false;
  std::optional<std::string> zn_range;  // "a..b"
  std::optional<int> enumerate;
  std::vector<std::string> checks;
  std::optional<std::string> report;
  unsigned threads = 1;
  bool list_checks = false;
};

struct HasseOptions {
  Source source;
  std::optional<std::string> output;
  unsigned threads = 1;
};

struct EnumerateOptions {
  int max_size = 6;
  bool dedupe = true;
  std::string filter = "all";       // all | modular | distributive
  std::string format = "counts";    // counts | documents
};

struct ScanOptions {
  std::string range = "2..100";
  unsigned threads = 1;
};

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int cmd_hasse(const HasseOptions& options, std::ostream& out, std::ostream& err);
int cmd_enumerate(const EnumerateOptions& options, std::ostream& out, std::ostream& err);
int cmd_scan_zn(const ScanOptions& options, std::ostream& out, std::ostream& err);

/// The DOT text `hasse` writes.
std::string hasse_dot(const Instance& instance, unsigned threads);

}  // namespace mulat::cli

#endif  // MULAT_CLI_COMMANDS_HPP_
