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

#include <filesystem>
#include <map>
#include <mutex>
#include <string>

#include "dialforge/gateway.hpp"

namespace dialforge {

// What the mock does with a prompt that has no scripted entry.
enum class MockFallback { Simulate, Error, Fixed };

struct MockEntry {
  std::string reply;
  int transient_failures = 0;  // TransientErrors raised before the reply
  bool auth_error = false;
};

// Script file:
//   {"fallback": "simulate" | "error" | "fixed",
//    "fixed_reply": "...",
//    "entries": [{"prompt_sha256": "...", "reply": "...",
//                 "transient_failures": 0, "auth_error": false}]}
struct MockScript {
  MockFallback fallback = MockFallback::Simulate;
  std::string fixed_reply;
  std::map<std::string, MockEntry> entries;  // keyed by prompt sha256

  static MockScript load(const std::filesystem::path& path);
  static MockScript parse(std::string_view json_text);
};

// Offline provider. Scripted prompts return their recorded reply; others are
// answered by simulate_reply() (or fail, per the fallback). Replies depend
// only on the prompt text.
class MockProvider : public Provider {
 public:
  explicit MockProvider(MockScript script = {});

  std::string id() const override { return "mock"; }
  std::string complete(const std::string& prompt) override;

  std::size_t call_count() const;

 private:
  MockScript script_;
  mutable std::mutex mu_;
  std::map<std::string, int> failures_seen_;
  std::size_t calls_ = 0;
};

// Deterministic stand-in for a model, keyed off the prompt's template:
// seeds come from a sentence pool, ortholex applies the guideline table,
// morph applies the rule's example edit once, fill echoes the US word,
// rate answers 4, benchmark prompts answer (A), judges score 1.
// Unknown prompts raise ParseError.
std::string simulate_reply(std::string_view prompt);

}  // namespace dialforge
