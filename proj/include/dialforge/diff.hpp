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
#include <string_view>
#include <vector>

#include "dialforge/dialog.hpp"
#include "dialforge/edits.hpp"
#include "dialforge/kb.hpp"
#include "dialforge/text.hpp"

namespace dialforge {

// A changed region: a[a_begin, a_end) became b[b_begin, b_end).
struct DiffRegion {
  std::size_t a_begin = 0, a_end = 0;
  std::size_t b_begin = 0, b_end = 0;
};

// Token-level LCS alignment. Adjacent changed tokens form one region, and two
// regions separated only by whitespace are merged ("parking lots" -> "car
// parks" is one region).
std::vector<DiffRegion> diff_text(std::string_view a, std::string_view b);

// Explains a changed region with knowledge-base mappings.
class Attributor {
 public:
  Attributor(const KnowledgeBase& kb, Dialect target);

  // rule_ref of the mapping combination that rewrites `source` into
  // `replacement` (several refs joined with '|'), or "unattributed". The
  // target dialect's rows are tried before every other dialect's.
  std::string attribute(std::string_view source, std::string_view replacement) const;

  // Dimension of a rule_ref produced by attribute().
  Dimension dimension_of(std::string_view rule_ref) const;

  // Byte spans of every mapping source term found in `text`, any dialect.
  std::vector<std::pair<std::size_t, std::size_t>> term_spans(std::string_view text) const;

 private:
  struct Tier {
    TermMatcher matcher;
    std::vector<std::vector<const WordMapping*>> by_term;
  };
  static Tier build_tier(const std::vector<const WordMapping*>& maps);
  bool search(const Tier& tier, std::string_view src, const std::vector<Token>& tokens,
              std::size_t tok, std::string& out, std::string_view target,
              std::vector<const WordMapping*>& chosen, int& budget) const;

  const KnowledgeBase* kb_;
  Tier target_tier_;
  Tier all_tier_;
};

// Replacement text for a match of `m` over `span`: inflected and cased like
// the span.
std::string cased_replacement(const WordMapping& m, std::string_view span,
                              const TermMatch& match);

// Records explaining how `transformed` differs from the SAE dialog. Throws
// ValidationError if the turn counts differ.
std::vector<TransformationRecord> diff_extract(const Dialog& original,
                                               const std::vector<Turn>& transformed,
                                               const KnowledgeBase& kb, Dialect target);

// Step edits turning `current` into `next`, all tagged with one rule.
std::vector<StepEdit> diff_steps(std::string_view current, std::string_view next,
                                 Dimension dimension, const std::string& rule_ref);

// Step edits turning `current` into `next`, each region attributed through
// `attributor`.
std::vector<StepEdit> diff_steps(std::string_view current, std::string_view next,
                                 const Attributor& attributor);

}  // namespace dialforge
