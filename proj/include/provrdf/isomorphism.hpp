// Copyright 2026 The provrdf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "provrdf/term.hpp"
#include "provrdf/triple_set.hpp"

namespace provrdf {

/// True iff the two triple sets are equal up to a consistent one-to-one
/// renaming of blank nodes. Duplicate triples in the inputs are ignored.
///
/// Colour refinement prunes candidates, then a backtracking search confirms
/// a bijection; intended for graphs of up to a few hundred triples.
bool isomorphic(const std::vector<Triple>& a, const std::vector<Triple>& b);
bool isomorphic(const TripleSet& a, const TripleSet& b);

}  // namespace provrdf
