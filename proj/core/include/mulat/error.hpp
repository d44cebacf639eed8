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

#ifndef MULAT_ERROR_HPP_
#define MULAT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mulat {

enum class ErrorCode {
  IndexOutOfRange,
  SizeLimitExceeded,
  NotAPartialOrder,
  NotALattice,
  NotAPreorder,
  NotATopology,
  NotAnOpen,
  NotAssociative,
  NotCommutative,
  IdentityViolation,
  NotJoinDistributive,
  NotDistributive,
  NotModular,
  NotAFrame,
  PreorderViolation,
  MeetNotZero,
  NotPseudoComplement,
  EmptySet,
  ExponentOutOfRange,
  InvalidModulus,
  SearchBudgetExceeded,
  UnknownCheckName,
  InvalidDocument,
  PostconditionFailed,
};

std::string_view to_string(ErrorCode code);

/// Every constructor and decision procedure in mulat reports failures through
/// this type. The message carries the witness (offending pair, triple, ...)
/// already rendered with element labels.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mulat

#endif  // MULAT_ERROR_HPP_
