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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dialforge/dialog.hpp"

namespace dialforge {

// Orders records by (turn, speaker, offset).
void sort_records(std::vector<TransformationRecord>& records);

// Records of one utterance, in offset order.
std::vector<TransformationRecord> records_for(const std::vector<TransformationRecord>& records,
                                              int turn, Speaker speaker);

// Substitutes every record into the SAE text of one utterance. Records must
// be sorted, non-overlapping and their source spans must occur at their
// offsets; otherwise ContractViolation.
std::string apply_edits(std::string_view base, std::span<const TransformationRecord> recs);

// Whole-dialog replay: the SAE turns with every record substituted.
std::vector<Turn> apply_records(const std::vector<Turn>& base,
                                const std::vector<TransformationRecord>& records);

// [begin, end) of record `i` in the transformed text of its utterance.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};
std::vector<Span> current_spans(std::span<const TransformationRecord> recs);

// A change made by one step, expressed on the current (already transformed)
// text of an utterance.
struct StepEdit {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string replacement;
  Dimension dimension = Dimension::Lexical;
  std::string rule_ref;
};

// Folds step edits (non-overlapping, on the current text) into the records
// of one utterance so that they stay relative to the SAE text. A step edit
// that overlaps or touches an existing record is merged with it into one
// record whose rule_ref lists every component; a merged record whose
// replacement equals its source is dropped.
void compose_edits(std::string_view base, std::vector<TransformationRecord>& utterance_recs,
                   std::vector<StepEdit> steps, int turn, Speaker speaker);

// compose_edits for one utterance of a dialog; `records` holds all
// utterances and is kept sorted.
void compose_into(const std::vector<Turn>& base, std::vector<TransformationRecord>& records,
                  int turn, Speaker speaker, std::vector<StepEdit> steps);

// Removes record `index` from `records`; its span returns to the SAE form.
void revert_record(std::vector<TransformationRecord>& records, std::size_t index);

}  // namespace dialforge
