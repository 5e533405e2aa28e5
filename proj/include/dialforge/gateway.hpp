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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <semaphore>
#include <string>
#include <string_view>
#include <vector>

#include "dialforge/dialect.hpp"

namespace dialforge {

// A model backend. complete() throws TransientError for retryable failures
// and AuthError for credential problems.
class Provider {
 public:
  virtual ~Provider() = default;
  virtual std::string id() const = 0;
  virtual std::string complete(const std::string& prompt) = 0;
};

struct CompletionExchange {
  std::string template_name;
  std::string rendered_prompt;
  std::string reply;
  std::string provider_id;
  int attempt_count = 0;
  double latency_ms = 0.0;
};

struct RetryPolicy {
  int max_attempts = 5;
  double initial_backoff_s = 1.0;
  double multiplier = 2.0;
  double max_backoff_s = 30.0;
  double jitter = 0.25;  // +/- fraction of the nominal delay
};

using Sleeper = std::function<void(std::chrono::milliseconds)>;

// Shareable completion client: bounded concurrency, retry with jittered
// exponential backoff, and an append-only exchange log.
class Client {
 public:
  explicit Client(std::shared_ptr<Provider> provider, RetryPolicy policy = {},
                  int permits = 8, Sleeper sleeper = {});

  // Returns the reply. Throws AuthError immediately, TransportError once the
  // attempts are used up.
  std::string complete(std::string_view template_name, const std::string& prompt);
  CompletionExchange complete_exchange(std::string_view template_name,
                                       const std::string& prompt);

  // Appends each exchange as one JSON line to `path` as it completes.
  void set_audit_log(const std::filesystem::path& path);

  std::vector<CompletionExchange> exchanges() const;
  std::size_t exchange_count() const;
  const RetryPolicy& policy() const { return policy_; }
  std::string provider_id() const { return provider_->id(); }

  // Nominal delay before retry number `retry` (1-based), without jitter.
  std::chrono::milliseconds backoff(int retry) const;

 private:
  void record(const CompletionExchange& ex);

  std::shared_ptr<Provider> provider_;
  RetryPolicy policy_;
  Sleeper sleeper_;
  std::counting_semaphore<1024> permits_;
  mutable std::mutex log_mu_;
  std::vector<CompletionExchange> log_;
  std::optional<std::filesystem::path> audit_path_;
};

struct ConvertedReply {
  std::string dialogue;
  std::string explanation;
};

// Splits on "CONVERTED DIALOGUE:" and "EXPLANATION OF CHANGES:". A missing
// explanation gives an empty one; a missing dialogue marker is a ParseError.
ConvertedReply parse_converted(std::string_view reply);

struct AnswerOption {
  char letter = 'A';
  Dialect label = Dialect::US;
  std::string text;  // option text as shown to the model

  friend bool operator==(const AnswerOption&, const AnswerOption&) = default;
};

// First "ANSWER:" line mapped to an option by letter, "(letter)", full
// option text, or a dialect alias. nullopt means malformed.
std::optional<Dialect> parse_answer(std::string_view reply,
                                    const std::vector<AnswerOption>& options);

// Same, returning the chosen letter.
std::optional<char> parse_answer_letter(std::string_view reply,
                                        const std::vector<AnswerOption>& options);

// "WORD: <term>". Throws ParseError.
std::string parse_word_reply(std::string_view reply);

// "Rating: <1..4>". Throws ParseError for anything else.
int parse_rating_reply(std::string_view reply);

enum class JudgeScore { Appropriate, Inappropriate, NotApplicable };
std::string_view to_string(JudgeScore s);

// "Score: 0|1|N/A". nullopt when no score can be read.
std::optional<JudgeScore> parse_judge_score(std::string_view reply);

}  // namespace dialforge
