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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dialforge {

// The nine English varieties. US is the source dialect of every transform.
enum class Dialect : std::uint8_t { US, AU, GB, CA, IN, IE, NG, PH, SC };

inline constexpr std::size_t kDialectCount = 9;

inline constexpr std::array<Dialect, kDialectCount> kAllDialects = {
    Dialect::US, Dialect::AU, Dialect::GB, Dialect::CA, Dialect::IN,
    Dialect::IE, Dialect::NG, Dialect::PH, Dialect::SC};

inline constexpr std::size_t index_of(Dialect d) {
  return static_cast<std::size_t>(d);
}

// "GB", "AU", ...
std::string_view code(Dialect d);

// Option text of the identification prompt, e.g. "Irish English (Ireland)".
std::string_view display_name(Dialect d);

// Adjective used in prompt sentences such as "... to {target_dialect}
// English Dialect", e.g. "Irish".
std::string_view adjective(Dialect d);

// BCP-47 style locale tag used in guideline headers ("en-AU").
std::string_view locale_tag(Dialect d);

std::optional<Dialect> parse_dialect_code(std::string_view s);

// Accepts a code, a display name, or a display name without its
// parenthetical ("Irish English"). Case-insensitive.
std::optional<Dialect> parse_dialect_alias(std::string_view s);

// Throws ValidationError on unknown codes.
Dialect dialect_from_code(std::string_view s);

enum class Dimension : std::uint8_t { Lexical, Orthographic, Morphosyntactic, Unit };

std::string_view to_string(Dimension d);
Dimension dimension_from_string(std::string_view s);

enum class Variant : std::uint8_t { OrthoLex, RbtUser, RbtModel };

inline constexpr std::array<Variant, 3> kAllVariants = {
    Variant::OrthoLex, Variant::RbtUser, Variant::RbtModel};

std::string_view to_string(Variant v);
Variant variant_from_string(std::string_view s);

enum class Speaker : std::uint8_t { User, Assistant };

std::string_view to_string(Speaker s);
Speaker speaker_from_string(std::string_view s);

enum class DialogMode : std::uint8_t { Natural, Indirect };

std::string_view to_string(DialogMode m);
DialogMode dialog_mode_from_string(std::string_view s);

enum class RatingSource : std::uint8_t { Human, Llm };

std::string_view to_string(RatingSource s);
RatingSource rating_source_from_string(std::string_view s);

}  // namespace dialforge
