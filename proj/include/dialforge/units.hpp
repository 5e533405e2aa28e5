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

#include <string>
#include <string_view>
#include <vector>

#include "dialforge/dialect.hpp"
#include "dialforge/edits.hpp"

namespace dialforge {

// Imperial quantities ("5 miles", "70 degrees Fahrenheit", "2 gallons",
// "10 pounds", "6 feet") rewritten in metric. US text is never touched.
// Edits are non-overlapping, in text order, tagged unit:metric.
std::vector<StepEdit> unit_conversions(std::string_view text, Dialect d);

std::string convert_units(std::string_view text, Dialect d);

// "8", "2.5", "1,200": at most one decimal, no trailing ".0".
std::string format_quantity(double v);

}  // namespace dialforge
