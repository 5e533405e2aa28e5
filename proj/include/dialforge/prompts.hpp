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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dialforge/dialect.hpp"
#include "dialforge/kb.hpp"

namespace dialforge {

using Bindings = std::map<std::string, std::string, std::less<>>;

// OrthoLex drops the mention of morphosyntax from the two benchmark prompts.
enum class PromptFlavor { Standard, OrthoLex };

// seed_natural, seed_indirect, ortholex_transform, morph_transform,
// wordbank_fill, wordbank_rate, identify, response_complete, judge_lexical,
// judge_orthographic, judge_morph.
const std::vector<std::string>& template_names();

// Stored body; throws RenderError for unknown names.
std::string template_body(std::string_view name, PromptFlavor flavor = PromptFlavor::Standard);

// Placeholder names of a template in order of first appearance.
std::vector<std::string> placeholders(std::string_view name);

// Substitutes every {placeholder}. Throws RenderError listing missing or
// unexpected binding names. Values are inserted verbatim.
std::string render(std::string_view name, const Bindings& bindings,
                   PromptFlavor flavor = PromptFlavor::Standard);

// "(A) Indian English (India)\n(B) ..." without a trailing newline.
std::string render_options(const std::vector<std::pair<char, std::string>>& options);

// Guideline block placed in the ortholex prompt: one sentence per sampled
// mapping, the dialect's general spelling conventions, and the sampled
// mappings as a table.
std::string ortholex_guidance(Dialect dialect, const std::vector<const WordMapping*>& sampled,
                              const std::vector<std::string>& conventions);

// Feature phrase bound to {sentence} of response_complete.
std::string_view feature_phrase(PromptFlavor flavor);

}  // namespace dialforge
