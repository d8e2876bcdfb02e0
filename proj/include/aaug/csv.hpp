/**
 * Copyright 2026 The aaug Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace aaug::csv {

struct Row {
  std::size_t line = 0;  // 1-based line number in the source file
  std::vector<std::string> fields;
};

// RFC 4180 subset: comma separated, double-quoted fields may hold commas and
// doubled quotes, no embedded newlines. Blank lines are skipped; a trailing
// '\r' is dropped.
std::vector<std::string> split_line(std::string_view line);
std::vector<Row> read_file(const std::filesystem::path& path);

std::string quote(std::string_view field);
std::string join(const std::vector<std::string>& fields);

}  // namespace aaug::csv
