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

#include <optional>
#include <string>
#include <vector>

#include "dialforge/dialog.hpp"
#include "dialforge/gateway.hpp"
#include "dialforge/kb.hpp"

namespace dialforge {

struct SeedRequest {
  std::string seed_word;
  DialogMode mode = DialogMode::Natural;
  int turn_count = 1;
};

// "gas station" natural 4 turns -> "gas-station.nat.t4"
std::string seed_dialog_id(const SeedRequest& req);

struct SeedCheck {
  bool ok = true;
  std::vector<std::string> reasons;  // e.g. "turn-count:3!=2"
};

// Turn count and seed-word placement in the first user message.
SeedCheck validate_seed(const Dialog& dialog, const SeedRequest& req);

struct SeedOutcome {
  SeedRequest request;
  std::optional<Dialog> dialog;  // set when accepted
  int attempts = 0;
  std::vector<std::string> reasons;  // of the last failed attempt
};

// Renders the seed prompt, completes and validates, retrying up to
// `max_attempts` times. Throws ContractViolation for a seed word the
// knowledge base does not know or a turn count outside {1, 2, 4, 8}.
SeedOutcome generate_seed(const SeedRequest& req, const KnowledgeBase& kb, Client& client,
                          int max_attempts = 3);

// Both modes for every seed word and turn count, in (word, turns, mode)
// order. Requests run in parallel; the result order does not depend on it.
std::vector<SeedOutcome> generate_seeds(const std::vector<std::string>& words,
                                        const std::vector<int>& turn_counts,
                                        const KnowledgeBase& kb, Client& client,
                                        int max_attempts = 3);

}  // namespace dialforge
