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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dialforge/dialog.hpp"
#include "json.hpp"

namespace dialforge {

using Json = nlohmann::ordered_json;

Json to_json(const Turn& t);
Json to_json(const std::vector<Turn>& turns);
Json to_json(const TransformationRecord& r);
Json to_json(const Dialog& d);
Json to_json(const TransformedDialog& d);
Json to_json(const DialectSet& s);

std::vector<Turn> turns_from_json(const Json& j);
TransformationRecord record_from_json(const Json& j);
Dialog dialog_from_json(const Json& j);
TransformedDialog transformed_from_json(const Json& j);
DialectSet dialect_set_from_json(const Json& j);

// Writes `content` to a temporary file next to `path` and renames it into
// place, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

// Reads one JSON object per line (LF or CRLF). Blank lines are skipped.
// Throws ParseError carrying the 1-based line number of the first bad line.
void read_jsonl(const std::filesystem::path& path,
                const std::function<void(const Json&, std::size_t line)>& fn);

template <typename T, typename Fn>
std::vector<T> read_jsonl_as(const std::filesystem::path& path, Fn convert) {
  std::vector<T> out;
  read_jsonl(path, [&](const Json& j, std::size_t) { out.push_back(convert(j)); });
  return out;
}

// One compact JSON object per line, keys in insertion order.
std::string to_jsonl(const std::vector<Json>& rows);

void write_dataset(const std::filesystem::path& path,
                   const std::vector<TransformedDialog>& dialogs);
std::vector<TransformedDialog> read_dataset(const std::filesystem::path& path);

void write_dialogs(const std::filesystem::path& path, const std::vector<Dialog>& dialogs);
std::vector<Dialog> read_dialogs(const std::filesystem::path& path);

}  // namespace dialforge
