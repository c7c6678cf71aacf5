// Copyright 2026 The Nomsupport Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOMSUPPORT_DATA_H_
#define NOMSUPPORT_DATA_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace nomsupport {

// Returns the contents of a data file compiled into the library, e.g.
// EmbeddedData("lexicon.tsv"). Throws InvalidInput for unknown names.
std::string_view EmbeddedData(std::string_view name);

// Reads a whole file. Throws IoError when it cannot be opened.
std::string ReadFile(const std::filesystem::path &path);

// Writes a whole file, replacing it. Throws IoError on failure.
void WriteFile(const std::filesystem::path &path, std::string_view content);

// Iterates over the non-empty, non-comment lines of a data file. Lines
// starting with '#' are comments. The callback receives the 1-based line
// number and the line without its trailing newline or carriage return.
template <typename Fn>
void ForEachDataLine(std::string_view text, Fn &&fn) {
  int number = 0;
  while (!text.empty()) {
    size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view()
                                         : text.substr(eol + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    fn(number, line);
  }
}

}  // namespace nomsupport

#endif  // NOMSUPPORT_DATA_H_
