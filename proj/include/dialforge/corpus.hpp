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

#include "dialforge/dialog.hpp"
#include "dialforge/gateway.hpp"
#include "dialforge/kb.hpp"
#include "dialforge/quality.hpp"
#include "dialforge/transform.hpp"
#include "dialforge/validity.hpp"

namespace dialforge {

// Offline SAE dialogs assembled from a sentence pool: `per_turn_count`
// dialogs for each turn count, seeded by the knowledge base's source terms
// in rotation and alternating natural/indirect mode. Every dialog passes
// validate_seed.
std::vector<Dialog> synthetic_corpus(const KnowledgeBase& kb, const std::vector<int>& turn_counts,
                                     std::size_t per_turn_count, std::uint64_t seed);

struct BuildOptions {
  std::vector<Dialect> dialects{kAllDialects.begin(), kAllDialects.end()};
  std::vector<Variant> variants{kAllVariants.begin(), kAllVariants.end()};
  std::uint64_t global_seed = 0;
  EngineMode mode = EngineMode::Deterministic;
  Client* client = nullptr;  // required in llm mode
};

// Everything produced for one base dialog in one dialect.
struct DialectBuild {
  std::vector<TransformPlan> plans;
  std::vector<TransformedDialog> versions;  // one per requested variant
  std::vector<QcReport> reports;
  std::vector<std::string> warnings;
};

// Plans, transforms, quality control and labels for one (dialog, dialect).
// US versions are the SAE dialog itself.
DialectBuild build_one(const Dialog& base, Dialect d, const KnowledgeBase& kb,
                       const ValidityMatrix& matrix, const BuildOptions& opt);

struct DatasetBuild {
  std::vector<TransformedDialog> dataset;  // (base, dialect, variant) order
  std::vector<TransformPlan> plans;
  std::vector<QcReport> reports;
  std::vector<std::string> warnings;
};

// Serial reference and OpenMP version; identical output for any thread
// count.
DatasetBuild build_dataset_serial(const std::vector<Dialog>& corpus, const KnowledgeBase& kb,
                                  const ValidityMatrix& matrix, const BuildOptions& opt);
DatasetBuild build_dataset_parallel(const std::vector<Dialog>& corpus, const KnowledgeBase& kb,
                                    const ValidityMatrix& matrix, const BuildOptions& opt);

// Gold labels for every dialog of a dataset.
std::vector<DialectSet> label_serial(const std::vector<TransformedDialog>& dataset,
                                     const ValidityMatrix& matrix);
std::vector<DialectSet> label_parallel(const std::vector<TransformedDialog>& dataset,
                                       const ValidityMatrix& matrix);

}  // namespace dialforge
