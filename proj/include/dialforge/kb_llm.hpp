// Copyright 2026 The dialforge Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "dialforge/gateway.hpp"
#include "dialforge/kb.hpp"

namespace dialforge {

// Human rows of one dialect as a reference table for the rating prompt.
std::string human_guideline(const KnowledgeBase& kb, Dialect d);

// Asks the model for the dialect form of `source`. An unchanged reply
// becomes an identity row rated 1; otherwise the candidate is rated by
// rate_candidate(). The row is tagged as llm-rated and is not added.
WordMapping fill_missing_mapping(const KnowledgeBase& kb, Client& client,
                                 std::string_view source, Dialect d, Dimension dim);

// Model rating in 1..4 for a proposed mapping. Throws ContractViolation when
// a human rating already exists for (source, dialect, dimension), ParseError
// when the reply carries no rating in range.
int rate_candidate(const KnowledgeBase& kb, Client& client, std::string_view source,
                   std::string_view target, Dialect d, Dimension dim);

struct FillSummary {
  std::size_t requested = 0;
  std::size_t identity = 0;
  std::size_t verified = 0;  // effective rating 4 after verification
};

// Fills every (source, dialect, dimension) gap where some other dialect has
// a row for the source and the target dialect has none. Dialects other than
// US only; work is done in (source, dimension, dialect) order.
FillSummary fill_gaps(KnowledgeBase& kb, Client& client);

}  // namespace dialforge
