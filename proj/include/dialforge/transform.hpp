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
#include <string>
#include <vector>

#include "dialforge/dataset_io.hpp"
#include "dialforge/dialog.hpp"
#include "dialforge/gateway.hpp"
#include "dialforge/kb.hpp"
#include "dialforge/rng.hpp"

namespace dialforge {

enum class EngineMode { Llm, Deterministic };
std::string_view to_string(EngineMode m);
EngineMode engine_mode_from_string(std::string_view s);

// Everything random about one (dialog, dialect, variant) transformation,
// drawn up front and persisted so a run can be replayed.
struct TransformPlan {
  std::string base_id;
  Dialect dialect = Dialect::US;
  Variant variant = Variant::OrthoLex;
  std::vector<std::string> sampled_mappings;  // OrthoLex: mapping ids
  std::vector<std::string> sampled_features;  // RBT: feature ids, catalog order
  std::uint64_t rng_seed = 0;

  friend bool operator==(const TransformPlan&, const TransformPlan&) = default;
};

Json to_json(const TransformPlan& p);
TransformPlan plan_from_json(const Json& j);

// Non-identity effective mappings of `d`, each kept with its injection
// probability. One draw per mapping in (dimension, source) order.
std::vector<const WordMapping*> sample_mappings(const KnowledgeBase& kb, Dialect d, Rng& rng);

// One draw per catalog feature; a feature is kept when the draw falls under
// the injection probability of its prevalence in `d`. RBT_model treats
// features without model mirror as probability 0, so for the same stream it
// keeps a subset of what RBT_user keeps. Throws ContractViolation for
// OrthoLex.
std::vector<std::string> sample_features(const KnowledgeBase& kb, Dialect d, Variant v,
                                         Rng& rng);

// OrthoLex plans draw from derive_rng_seed(global, base, d, OrthoLex). Both
// RBT plans draw from one per-(base, d) stream so their pools nest.
TransformPlan make_plan(const KnowledgeBase& kb, std::string_view base_id, Dialect d,
                        Variant v, std::uint64_t global_seed);

struct TransformResult {
  TransformedDialog dialog;
  std::vector<std::string> warnings;
  bool flagged = false;  // the model pass was abandoned; see warnings
};

// Unit conversion, then wordbank substitution of the plan's mappings
// (deterministic) or the ortholex prompt (llm). Records are relative to the
// SAE dialog. Throws ContractViolation for a US target or a non-OrthoLex
// plan; `client` may be null in deterministic mode.
TransformResult apply_ortholex(const Dialog& dialog, const TransformPlan& plan,
                               const KnowledgeBase& kb, Client* client, EngineMode mode);

// Morphosyntactic features of the plan applied one by one to every
// utterance, on top of an OrthoLex result of the same dialog and dialect.
// Deterministic mode and empty plans pass the text through unchanged.
TransformResult apply_morph_sequence(const Dialog& base, const TransformedDialog& ortholex,
                                     const TransformPlan& plan, const KnowledgeBase& kb,
                                     Client* client, EngineMode mode);

// The SAE dialog itself, as the US member of a parallel set.
TransformedDialog identity_version(const Dialog& base, Variant v);

}  // namespace dialforge
