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

#include <bitset>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dialforge/dialog.hpp"
#include "dialforge/kb.hpp"
#include "dialforge/text.hpp"

namespace dialforge {

inline constexpr std::string_view kUnitRef = "unit:metric";

// "lexical:gas station>servo", "orthographic:color>colour".
std::string mapping_key(const WordMapping& m);
// "morph:<feature_id>".
std::string feature_key(std::string_view feature_id);

using DialectBits = std::bitset<kDialectCount>;

DialectSet to_set(DialectBits bits);

// Which transformations are acceptable in which dialect, and which SAE terms
// may not be left untransformed. Immutable once built.
class ValidityMatrix {
 public:
  ValidityMatrix() = default;
  static ValidityMatrix build(const KnowledgeBase& kb);

  // Key of one rule_ref component; nullopt for "unattributed" and refs the
  // knowledge base does not know.
  std::optional<std::string> key_for(std::string_view ref) const;

  DialectBits valid_in(std::string_view key) const;
  bool valid(std::string_view key, Dialect d) const { return valid_in(key)[index_of(d)]; }

  // Dialects where leaving `source_term` in SAE form is invalid.
  DialectBits obligatory(std::string_view source_term) const;

  // Union of obligatory() over the SAE terms still present in the text
  // outside every record's replacement.
  DialectBits retained_violations(const std::vector<Turn>& turns,
                                  const std::vector<TransformationRecord>& records) const;

  bool empty() const { return entries_.empty() && obligatory_.empty(); }
  const std::map<std::string, DialectBits, std::less<>>& entries() const { return entries_; }

  // Deterministic line-delimited dump; equal matrices give equal bytes.
  void write_jsonl(std::ostream& out) const;

 private:
  std::map<std::string, DialectBits, std::less<>> entries_;
  std::map<std::string, DialectBits, std::less<>> obligatory_;
  std::map<std::string, std::string, std::less<>> ref_keys_;
  TermMatcher obligatory_matcher_;
};

// Gold label set: the target dialect plus every other dialect in which all
// records are valid and no retained SAE term is obligatory. Any unattributed
// record limits the set to the target.
DialectSet assign_labels(const TransformedDialog& dialog, const ValidityMatrix& matrix);

// Same rule over explicit parts; used for single-utterance label sets.
DialectSet assign_labels(Dialect target, const std::vector<Turn>& turns,
                         const std::vector<TransformationRecord>& records,
                         const ValidityMatrix& matrix);

}  // namespace dialforge
