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
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dialforge/bench.hpp"
#include "dialforge/dataset_io.hpp"
#include "dialforge/error.hpp"
#include "dialforge/gateway.hpp"
#include "dialforge/http_provider.hpp"
#include "dialforge/transform.hpp"

namespace dialforge {

enum class Stage {
  KbBuild,
  SeedGen,
  Ortholex,
  Rbt,
  QcLabel,
  BenchBuild,
  BenchRun,
  Report,
  ExportTrain,
};
std::string_view to_string(Stage s);
Stage stage_from_string(std::string_view s);
// kb-build through report; export-train is run on request only.
const std::vector<Stage>& default_stages();
const std::vector<Stage>& all_stages();

struct ProviderSettings {
  std::string kind = "mock";  // "mock" | "http"
  std::filesystem::path mock_script;  // empty: simulate everything
  HttpProviderConfig http;
  int permits = 8;
  RetryPolicy retry;
};

// Relative paths are taken relative to the working directory.
struct PipelineConfig {
  std::filesystem::path run_dir = "runs/toy";
  std::filesystem::path kb_dir = "data/toy_kb";
  std::optional<std::uint64_t> global_seed;
  std::vector<Dialect> dialects{kAllDialects.begin(), kAllDialects.end()};
  std::vector<Variant> variants{kAllVariants.begin(), kAllVariants.end()};
  std::vector<int> turns{1, 2, 4, 8};
  EngineMode engine_mode = EngineMode::Llm;
  std::string seed_source = "synthetic";  // "synthetic" | "llm"
  std::size_t seeds_per_turn = 20;         // synthetic only
  std::vector<std::string> seed_words;     // llm only; empty: every source term
  bool kb_fill = false;
  double verification_threshold = 1.0;
  std::size_t sample_per_cell = 500;
  std::size_t completion_candidates = kDialectCount;
  std::vector<Task> bench_tasks{Task::Identify, Task::Complete};
  ProviderSettings provider;
  std::map<Stage, ProviderSettings> stage_providers;  // per-stage overrides

  Json to_json() const;
  // Unknown keys are a ValidationError, as are bad values.
  static PipelineConfig from_json(const Json& j);
  static PipelineConfig load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  const ProviderSettings& provider_for(Stage s) const;
  // Throws ValidationError on empty lists, bad turn counts and the like.
  void validate() const;
};

struct StageResult {
  Stage stage = Stage::KbBuild;
  bool skipped = false;  // inputs, config and outputs unchanged
  std::vector<std::string> outputs;  // run_dir-relative
  std::vector<std::string> warnings;
};

// Thrown when another process holds the run directory.
class RunLocked : public DependencyError {
 public:
  using DependencyError::DependencyError;
};

// Exclusive lock on a run directory, held for the object's lifetime.
class RunLock {
 public:
  explicit RunLock(const std::filesystem::path& run_dir);
  ~RunLock();
  RunLock(const RunLock&) = delete;
  RunLock& operator=(const RunLock&) = delete;

 private:
  std::filesystem::path path_;
};

using ProviderFactory = std::function<std::shared_ptr<Provider>(Stage, const ProviderSettings&)>;

class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config);

  // Replaces how providers are built (tests).
  void set_provider_factory(ProviderFactory f) { factory_ = std::move(f); }

  // Runs one stage under the run-directory lock. A stage whose recorded
  // config, inputs and outputs are unchanged is skipped. A missing input is
  // a DependencyError naming the stage that produces it.
  StageResult run(Stage s);
  std::vector<StageResult> run(const std::vector<Stage>& stages);

  const PipelineConfig& config() const { return config_; }

 private:
  StageResult run_locked(Stage s);
  StageResult execute(Stage s);
  std::shared_ptr<Client> client_for(Stage s);
  std::string config_hash(Stage s) const;

  PipelineConfig config_;
  ProviderFactory factory_;
};

// Every final dataset file of a run, in (variant, dialect, turns) order.
std::vector<TransformedDialog> read_final_dataset(const PipelineConfig& config);

// run_dir-relative outputs of a stage for a config.
std::vector<std::string> stage_outputs(Stage s, const PipelineConfig& config);

// 0 success, 2 validation, 3 dependency, 4 transport, 1 anything else.
int exit_code_for(const std::exception& e);

}  // namespace dialforge
