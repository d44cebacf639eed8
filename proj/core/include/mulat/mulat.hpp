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

#ifndef MULAT_MULAT_HPP_
#define MULAT_MULAT_HPP_

#include "mulat/builders.hpp"
#include "mulat/corpus.hpp"
#include "mulat/enumerate.hpp"
#include "mulat/error.hpp"
#include "mulat/isomorphism.hpp"
#include "mulat/lattice.hpp"
#include "mulat/mu.hpp"
#include "mulat/quantale.hpp"
#include "mulat/relation.hpp"
#include "mulat/search.hpp"
#include "mulat/suite.hpp"
#include "mulat/view.hpp"

#endif  // MULAT_MULAT_HPP_
