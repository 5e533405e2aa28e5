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

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dialforge {

std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);
std::string_view trim(std::string_view s);
std::string normalize_newlines(std::string_view s);
bool iequals(std::string_view a, std::string_view b);

enum class TokenKind { Word, Space, Punct };

// Byte span into the tokenized text. Every byte belongs to exactly one token,
// so concatenating all tokens reproduces the input.
struct Token {
  std::size_t begin = 0;
  std::size_t end = 0;
  TokenKind kind = TokenKind::Word;

  std::size_t size() const { return end - begin; }
  std::string_view view(std::string_view text) const {
    return text.substr(begin, end - begin);
  }
};

// Words are runs of ASCII letters/digits and non-ASCII bytes, with internal
// apostrophes ("y'all"). Whitespace runs are one token; every other byte is
// a punctuation token of its own.
std::vector<Token> tokenize(std::string_view text);

// Word tokens only, lowercased.
std::vector<std::string> words_lower(std::string_view text);

enum class CasePattern { Lower, Capitalized, Upper };

CasePattern case_pattern(std::string_view span);
std::string apply_case(std::string_view replacement, CasePattern pattern);

// Which inflected forms of a term's final word also count as a match.
enum class Inflection {
  None,
  Plural,  // s, es, 's
  Full,    // Plural plus d, ed, ing (with silent-e drop)
};

struct MatchTerm {
  std::string phrase;  // lowercase, single-space separated words
  Inflection inflection = Inflection::Plural;
};

struct TermMatch {
  std::size_t begin = 0;  // byte offsets into the scanned text
  std::size_t end = 0;
  std::size_t term = 0;    // index into the matcher's term list
  std::string suffix;      // inflection suffix found on the final word
  bool e_dropped = false;  // final silent 'e' removed before the suffix
};

// Case-insensitive, word-boundary phrase matcher. Overlaps resolve
// left-to-right; at one position the longest phrase wins, ties go to the
// lower term index.
class TermMatcher {
 public:
  TermMatcher() = default;
  explicit TermMatcher(std::vector<MatchTerm> terms);

  std::vector<TermMatch> find_all(std::string_view text) const;

  // All matches starting at token `first` of `tokens`, longest first.
  std::vector<TermMatch> matches_at(std::string_view text,
                                    const std::vector<Token>& tokens,
                                    std::size_t first) const;

  const std::vector<MatchTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

 private:
  std::vector<MatchTerm> terms_;
  std::vector<std::vector<std::string>> words_;
  std::unordered_map<std::string, std::vector<std::size_t>> first_index_;
};

// Apply the inflection of a match to a replacement phrase so that
// "travelers" -> "travellers" and "organizing" -> "organising".
std::string inflect_like(std::string_view replacement, const TermMatch& match);

// Seed detection: word-boundary, case-insensitive, with plural suffixes.
bool contains_term(std::string_view text, std::string_view phrase);

}  // namespace dialforge
