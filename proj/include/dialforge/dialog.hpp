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

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dialforge/dialect.hpp"

namespace dialforge {

struct Utterance {
  Speaker speaker = Speaker::User;
  std::string text;

  friend bool operator==(const Utterance&, const Utterance&) = default;
};

struct Turn {
  std::string user;
  std::string assistant;

  friend bool operator==(const Turn&, const Turn&) = default;
};

std::string& utterance(Turn& t, Speaker s);
const std::string& utterance(const Turn& t, Speaker s);

// Turns flattened to USER, ASSISTANT, USER, ... order.
std::vector<Utterance> utterances(const std::vector<Turn>& turns);

struct Dialog {
  std::string id;
  std::string seed_word;
  DialogMode mode = DialogMode::Natural;
  std::vector<Turn> turns;

  friend bool operator==(const Dialog&, const Dialog&) = default;
};

inline constexpr std::string_view kUnattributed = "unattributed";

// One applied edit. `offset` is the byte offset of `source_span` in the SAE
// text of the utterance; records of one utterance never overlap, so the
// transformed text is the SAE text with every record substituted.
struct TransformationRecord {
  Dimension dimension = Dimension::Lexical;
  int turn_index = 0;  // 0-based
  Speaker speaker = Speaker::User;
  std::size_t offset = 0;
  std::string source_span;
  std::string replacement;
  // Mapping id, feature id, "unit:metric" or "unattributed". A record that
  // covers several rules joins their refs with '|'.
  std::string rule_ref;

  friend bool operator==(const TransformationRecord&, const TransformationRecord&) = default;
};

// Components of a possibly composite rule_ref.
std::vector<std::string> split_rule_ref(std::string_view ref);
bool is_unattributed(const TransformationRecord& r);

using DialectSet = std::set<Dialect>;

struct TransformedDialog {
  std::string base_id;
  Dialect dialect = Dialect::US;
  Variant variant = Variant::OrthoLex;
  std::vector<Turn> turns;
  std::vector<TransformationRecord> records;
  DialectSet gold_labels;
  std::string seed_word;
  DialogMode mode = DialogMode::Natural;

  friend bool operator==(const TransformedDialog&, const TransformedDialog&) = default;
};

// Checks utterances are non-empty after trimming and contain no newline.
// Throws ValidationError.
void validate_turns(const std::vector<Turn>& turns);

// "Turn N:" / "USER: ..." / "ASSISTANT: ..." blocks. Continuation lines are
// joined to the utterance with a single space. Throws FormatError.
Dialog parse_turn_format(std::string_view text);

// Canonical form, one block per turn followed by a blank line. Throws
// ContractViolation on an empty dialog.
std::string render_turn_format(const std::vector<Turn>& turns);
inline std::string render_turn_format(const Dialog& d) { return render_turn_format(d.turns); }

}  // namespace dialforge
