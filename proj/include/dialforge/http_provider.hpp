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

#include "dialforge/gateway.hpp"

namespace dialforge {

struct HttpProviderConfig {
  std::string base_url = "https://api.openai.com";  // scheme://host[:port]
  std::string path = "/v1/chat/completions";
  std::string model = "gpt-4o";
  std::string api_key_env = "OPENAI_API_KEY";
  std::optional<double> temperature;  // unset: provider default
  int timeout_s = 120;
};

// OpenAI-compatible chat completions endpoint. 401/403 raise AuthError;
// 429, 5xx and connection failures raise TransientError.
class HttpProvider : public Provider {
 public:
  explicit HttpProvider(HttpProviderConfig config);

  std::string id() const override { return "http:" + config_.model; }
  std::string complete(const std::string& prompt) override;

 private:
  HttpProviderConfig config_;
  std::string api_key_;
};

}  // namespace dialforge
