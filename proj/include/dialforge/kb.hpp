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
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "dialforge/dialect.hpp"
#include "dialforge/text.hpp"

namespace dialforge {

// One SAE -> dialect lexical or orthographic correspondence with its 1-4
// prevalence rating.
struct WordMapping {
  std::string id;
  std::string source_term;  // lowercase SAE form
  std::string target_term;  // lowercase dialect form
  Dialect dialect = Dialect::US;
  Dimension dimension = Dimension::Lexical;
  int rating = 1;
  RatingSource rating_source = RatingSource::Human;
  std::optional<std::string> notes;

  bool is_identity() const { return source_term == target_term; }
  friend bool operator==(const WordMapping&, const WordMapping&) = default;
};

struct MorphFeature {
  std::string feature_id;
  std::string rule_name;
  std::string original_example;
  std::string transformed_example;
  std::string description;
  std::optional<std::string> human_comments;

  friend bool operator==(const MorphFeature&, const MorphFeature&) = default;
};

struct MorphAnnotation {
  std::string feature_id;
  Dialect dialect = Dialect::US;
  int prevalence = 1;
  bool model_mirror = false;
  // Annotator remarks for this dialect; shown to the transformer in place of
  // the catalog-level comments when present.
  std::optional<std::string> human_comments;

  friend bool operator==(const MorphAnnotation&, const MorphAnnotation&) = default;
};

// Rating -> probability that a rule is injected into a dialog.
// {4: 1.0, 3: 0.6, 2: 0.3, 1: 0.0}. Throws ContractViolation outside 1..4.
double rating_to_injection_prob(int rating);

// Rating -> probability that an applied change is undone by quality control.
// {4: 0.0, 3: 0.4, 2: 0.7, 1: 1.0}. Throws ContractViolation outside 1..4.
double rating_to_reversion_prob(int rating);

// Inflected forms a mapping's source term also matches: plurals for
// vocabulary, plus -d/-ed/-ing for spellings ("organized").
inline Inflection inflection_for(Dimension d) {
  return d == Dimension::Orthographic ? Inflection::Full : Inflection::Plural;
}

std::string make_mapping_id(Dialect dialect, Dimension dim,
                            std::string_view source, std::string_view target);

// Rows read from one annotation file, not yet merged.
struct PartialKnowledgeBase {
  std::vector<WordMapping> mappings;
  std::vector<MorphAnnotation> annotations;
};

// Wordbank sheet for one dialect: source_term, target_term, dimension,
// rating, [model_mirror], [notes]. Tab or comma separated (decided by the
// header line). Every row becomes a human-rated mapping.
PartialKnowledgeBase load_annotations(const std::filesystem::path& path,
                                      Dialect dialect);

// Per-dialect morphosyntactic sheet: feature_id, prevalence, model_mirror
// (Y/N), [human_comments].
PartialKnowledgeBase load_morph_annotations(const std::filesystem::path& path,
                                            Dialect dialect);

// Feature catalog: feature_id, rule_name, original_example,
// transformed_example, description, [human_comments]. Order is preserved
// and is the order features are applied in.
std::vector<MorphFeature> load_feature_catalog(const std::filesystem::path& path);

// One convention per non-empty line; '#' starts a comment line.
std::vector<std::string> load_conventions(const std::filesystem::path& path);

// Split one delimited line; supports double-quoted fields with "" escapes.
std::vector<std::string> split_delimited(std::string_view line, char delim);

class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  // Adds or replaces a row. Human rows shadow llm rows for the same
  // (source_term, dialect, dimension); a second human row for that key, or a
  // second llm row, replaces the earlier one of the same source.
  void add_mapping(WordMapping m);
  void add_feature(MorphFeature f);
  // Throws ValidationError if the feature is unknown or the pair repeats.
  void add_annotation(MorphAnnotation a);
  void merge(const PartialKnowledgeBase& part);
  void set_conventions(Dialect d, std::vector<std::string> items);

  // Loads <dir>/features.tsv, <dir>/wordbank/<CODE>_*.tsv,
  // <dir>/morph/<CODE>.tsv and <dir>/conventions/<CODE>.txt when present.
  static KnowledgeBase load_directory(const std::filesystem::path& dir);

  // Human row if present, otherwise the llm row, otherwise null.
  const WordMapping* effective_mapping(std::string_view source, Dialect d,
                                       Dimension dim) const;
  // Any dimension; lexical is consulted before orthographic.
  const WordMapping* effective_mapping(std::string_view source, Dialect d) const;
  const WordMapping* human_mapping(std::string_view source, Dialect d,
                                   Dimension dim) const;
  const WordMapping* llm_mapping(std::string_view source, Dialect d,
                                 Dimension dim) const;
  const WordMapping* find_mapping(std::string_view id) const;

  // Effective mappings of one dialect, ordered by (dimension, source).
  std::vector<const WordMapping*> effective_mappings(Dialect d) const;
  std::vector<const WordMapping*> all_mappings() const;

  // Rating used by every downstream decision: the human rating when one
  // exists; for llm rows, 4 when the row is rated 4 and passes verification,
  // else 1 (only R_m = 4 counts as a valid transformation).
  int effective_rating(const WordMapping& m) const;

  // Binary verifier: an llm row is accepted with probability 1 when rated 4,
  // 0 otherwise; it passes when that probability reaches the threshold.
  bool passes_verification(const WordMapping& m) const;

  double verification_threshold() const { return verification_threshold_; }
  void set_verification_threshold(double t);

  const std::vector<MorphFeature>& features() const { return features_; }
  const MorphFeature* feature(std::string_view id) const;
  std::size_t feature_position(std::string_view id) const;
  const MorphAnnotation* annotation(std::string_view feature_id, Dialect d) const;
  std::vector<const MorphAnnotation*> annotations(Dialect d) const;
  const std::vector<MorphAnnotation>& all_annotations() const { return annotations_; }
  const std::vector<std::string>& conventions(Dialect d) const;

  // Sorted unique SAE source terms across all dialects.
  std::vector<std::string> source_terms() const;

  // One JSON object per line with a fixed key order. Byte-identical for
  // equal knowledge bases.
  void write_jsonl(std::ostream& out) const;
  static KnowledgeBase read_jsonl(std::istream& in);

  std::size_t mapping_count() const { return mappings_.size(); }

 private:
  using Key = std::tuple<std::string, Dialect, Dimension, RatingSource>;
  const WordMapping* lookup(std::string_view source, Dialect d, Dimension dim,
                            RatingSource src) const;

  std::map<Key, WordMapping> mappings_;
  std::map<std::string, Key, std::less<>> ids_;
  std::vector<MorphFeature> features_;
  std::map<std::string, std::size_t, std::less<>> feature_index_;
  std::vector<MorphAnnotation> annotations_;
  std::map<std::pair<std::string, Dialect>, std::size_t> annotation_index_;
  std::map<Dialect, std::vector<std::string>> conventions_;
  double verification_threshold_ = 1.0;
};

}  // namespace dialforge
