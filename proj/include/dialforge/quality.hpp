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

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dialforge/dialog.hpp"
#include "dialforge/kb.hpp"
#include "dialforge/rng.hpp"
#include "dialforge/validity.hpp"

namespace dialforge {

enum class VerdictAction { Keep, Revert, Unattributed };
std::string_view to_string(VerdictAction a);

struct ChangeVerdict {
  std::size_t record_index = 0;
  std::string rule_ref;
  int effective_rating = 4;
  RatingSource rating_source = RatingSource::Human;
  VerdictAction action = VerdictAction::Keep;
  double probability = 0.0;  // reversion probability used for Revert
  std::vector<std::string> mapping_ids;  // wordbank components of rule_ref
};

// One verdict per record, in record order. Wordbank components are rated by
// the target dialect's own row for the same source and dimension (absent or
// different target: 1); a composite record takes its lowest component.
// Morphosyntactic and unit components are kept.
std::vector<ChangeVerdict> audit_changes(const TransformedDialog& dialog, const KnowledgeBase& kb);

struct RevertOutcome {
  std::size_t reverted = 0;
  std::set<std::string> reverted_mapping_ids;
};

// Undoes each Revert record with its probability, right to left within each
// utterance. One draw per Revert verdict.
RevertOutcome revert_pass(const Dialog& base, TransformedDialog& dialog,
                          const std::vector<ChangeVerdict>& verdicts, Rng& rng);

// Applies target-dialect mappings whose source term is still present
// outside every record, each with its injection probability. One draw per
// mapping found, in mapping order; `exempt` ids are skipped. Returns the
// number of records added.
std::size_t apply_missed(const Dialog& base, TransformedDialog& dialog, const KnowledgeBase& kb,
                         Rng& rng, const std::set<std::string>& exempt = {});

struct QcReport {
  std::string base_id;
  Dialect dialect = Dialect::US;
  Variant variant = Variant::OrthoLex;
  std::size_t kept = 0;
  std::size_t reverted = 0;
  std::size_t added = 0;
  std::size_t unattributed = 0;
};

// audit -> revert -> apply_missed -> labels, seeded per
// (base, dialect, variant).
QcReport run_qc(const Dialog& base, TransformedDialog& dialog, const KnowledgeBase& kb,
                const ValidityMatrix& matrix, std::uint64_t global_seed);

std::string to_jsonl_line(const QcReport& r);

}  // namespace dialforge
