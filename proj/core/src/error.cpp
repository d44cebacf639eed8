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

#include "mulat/error.hpp"

namespace mulat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotAPreorder: return "NotAPreorder";
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::NotAnOpen: return "NotAnOpen";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::NotJoinDistributive: return "NotJoinDistributive";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::NotModular: return "NotModular";
    case ErrorCode::NotAFrame: return "NotAFrame";
    case ErrorCode::PreorderViolation: return "PreorderViolation";
    case ErrorCode::MeetNotZero: return "MeetNotZero";
    case ErrorCode::NotPseudoComplement: return "NotPseudoComplement";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::UnknownCheckName: return "UnknownCheckName";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
    case ErrorCode::PostconditionFailed: return "PostconditionFailed";
  }
  return "UnknownError";
}

}  // namespace mulat
