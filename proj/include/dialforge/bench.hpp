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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dialforge/dataset_io.hpp"
#include "dialforge/dialog.hpp"
#include "dialforge/gateway.hpp"
#include "dialforge/kb.hpp"
#include "dialforge/validity.hpp"

namespace dialforge {

enum class Task { Identify, Complete };
std::string_view to_string(Task t);
Task task_from_string(std::string_view s);

// One multiple-choice item. Identification offers the nine dialect names;
// completion offers the final assistant turn of each parallel version.
struct BenchItem {
  std::string item_id;  // "<base_id>/<dialect>/<variant>"
  Task task = Task::Identify;
  Variant variant = Variant::OrthoLex;
  int turn_count = 1;
  Dialect dialect = Dialect::US;     // dialect the dialog was built for
  std::vector<AnswerOption> options;  // shuffled, letters A..
  DialectSet gold;
  std::string dialog_text;      // identify: whole dialog; complete: history
  std::string final_user_turn;  // complete only

  std::optional<char> gold_letter() const;  // single-gold items
  friend bool operator==(const BenchItem&, const BenchItem&) = default;
};

Json to_json(const BenchItem& item);
BenchItem bench_item_from_json(const Json& j);
void write_items(const std::filesystem::path& path, const std::vector<BenchItem>& items);
std::vector<BenchItem> read_items(const std::filesystem::path& path);

struct BuildStats {
  std::size_t emitted = 0;
  std::size_t dropped = 0;  // completion: no unique answer
  std::vector<std::string> warnings;
};

// Up to `sample_per_cell` dialogs per (dialect, variant, turn count),
// chosen and option-shuffled with seeds derived from `seed`.
std::vector<BenchItem> build_classification_set(const std::vector<TransformedDialog>& dataset,
                                                std::size_t sample_per_cell, std::uint64_t seed,
                                                BuildStats* stats = nullptr);

// Labels of one utterance of a dialog, judged on its own records.
DialectSet utterance_labels(const TransformedDialog& d, int turn, Speaker s,
                            const ValidityMatrix& matrix);

// For every base dialog, variant and target dialect: history and final user
// turn from the target version, candidates from the final assistant turn of
// `candidates` versions, the target's included. Kept only when the gold
// response's labels meet the offered dialects in exactly the target and no
// other candidate repeats its text.
std::vector<BenchItem> build_completion_set(const std::vector<TransformedDialog>& dataset,
                                            const ValidityMatrix& matrix, std::uint64_t seed,
                                            std::size_t candidates = kDialectCount,
                                            BuildStats* stats = nullptr);

enum class PredictionStatus { Ok, Malformed, Unevaluated };
std::string_view to_string(PredictionStatus s);
PredictionStatus prediction_status_from_string(std::string_view s);

struct Prediction {
  std::string item_id;
  std::string reply;
  std::optional<char> letter;
  std::optional<Dialect> predicted;
  PredictionStatus status = PredictionStatus::Malformed;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

Json to_json(const Prediction& p);
Prediction prediction_from_json(const Json& j);
void write_predictions(const std::filesystem::path& path, const std::vector<Prediction>& preds);
std::vector<Prediction> read_predictions(const std::filesystem::path& path);

std::string render_item_prompt(const BenchItem& item);

// One completion per item, in item order. Transport failures leave the item
// unevaluated.
std::vector<Prediction> evaluate(const std::vector<BenchItem>& items, Client& client);

// Prediction from a raw reply.
Prediction score_reply(const BenchItem& item, std::string reply);

struct Accuracy {
  std::size_t correct = 0;
  std::size_t total = 0;
  double value() const { return total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0; }
};

// 9 gold rows x (9 predicted + malformed) columns.
using ConfusionCounts = std::array<std::array<std::size_t, kDialectCount + 1>, kDialectCount>;
using ConfusionMatrix = std::array<std::array<double, kDialectCount + 1>, kDialectCount>;

ConfusionCounts confusion_counts(const std::vector<BenchItem>& items,
                                 const std::vector<Prediction>& preds);
// Row-normalized; rows without items stay zero.
ConfusionMatrix confusion(const std::vector<BenchItem>& items, const std::vector<Prediction>& preds);

enum class BaselineKind { Fixed, Random };
struct BaselineStrategy {
  BaselineKind kind = BaselineKind::Random;
  Dialect fixed = Dialect::US;
};
BaselineStrategy baseline_from_string(std::string_view s);  // "random" or "fixed:GB"

// Per turn count: fixed(d) is the share of items whose gold set holds d;
// random is the mean of |gold| / |options|.
std::map<int, double> baseline_accuracy(const std::vector<BenchItem>& items,
                                        const BaselineStrategy& strategy);

// Published baselines (9-way identification, 1/2/4/8 turns). Computed on a
// corpus that is not distributed; kept for reference only.
inline constexpr std::array<double, 4> kReferenceRandomBaseline = {0.31, 0.27, 0.24, 0.22};
inline constexpr std::array<double, 4> kReferenceSaeBaseline = {0.21, 0.18, 0.17, 0.15};
inline constexpr std::array<double, 4> kReferenceGbBaseline = {0.37, 0.33, 0.29, 0.26};

struct ScoreReport {
  std::map<std::pair<Variant, int>, Accuracy> by_cell;
  std::map<Dialect, Accuracy> by_dialect;
  Accuracy overall;
  std::size_t malformed = 0;
  std::size_t unevaluated = 0;
  ConfusionMatrix confusion{};
  std::map<int, double> random_baseline;
  std::map<int, double> sae_baseline;

  double malformed_rate() const;
};

// Predictions are matched to items by id; unevaluated ones are left out of
// every denominator.
ScoreReport score(const std::vector<BenchItem>& items, const std::vector<Prediction>& preds);

std::string report_jsonl(const ScoreReport& r);
std::string report_table(const ScoreReport& r);
std::string confusion_tsv(const ConfusionMatrix& m);

struct JudgeResult {
  JudgeScore score = JudgeScore::NotApplicable;
  bool parsed = true;  // false: unreadable reply counted as N/A
};

// Dialect guidelines for one dimension as shown to the judge.
std::string judge_guidelines(const KnowledgeBase& kb, Dimension dim, Dialect d);

JudgeResult judge_generation(std::string_view response, Dimension dim, Dialect d,
                             const KnowledgeBase& kb, Client& client);

// Share of appropriate verdicts among those that are not N/A.
double judge_rate(const std::vector<JudgeResult>& results);

}  // namespace dialforge
