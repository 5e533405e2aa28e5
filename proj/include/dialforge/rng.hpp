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
#include <initializer_list>
#include <random>
#include <span>
#include <string_view>
#include <utility>

#include "dialforge/dialect.hpp"

namespace dialforge {

std::uint64_t splitmix64(std::uint64_t x);

// Stable seed for one (base dialog, dialect, variant) unit of work. Any
// change to any coordinate gives an unrelated seed.
std::uint64_t derive_rng_seed(std::uint64_t global_seed, std::string_view base_id,
                              Dialect dialect, Variant variant);

// Same construction over an arbitrary list of labels.
std::uint64_t derive_seed(std::uint64_t global_seed,
                          std::initializer_list<std::string_view> parts);

// Deterministic random source. mt19937_64's output sequence is fixed by the
// standard; the conversions below avoid the implementation-defined
// distributions so results match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      auto j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dialforge
