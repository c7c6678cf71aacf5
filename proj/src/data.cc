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

#include "nomsupport/data.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "nomsupport/error.h"

namespace nomsupport {
namespace internal {
extern const std::pair<std::string_view, std::string_view> kEmbeddedFiles[];
extern const int kNumEmbeddedFiles;
}  // namespace internal

std::string_view EmbeddedData(std::string_view name) {
  for (int i = 0; i < internal::kNumEmbeddedFiles; ++i) {
    const auto &[file, content] = internal::kEmbeddedFiles[i];
    if (file == name) return content;
  }
  throw InvalidInput("no embedded data file named " + std::string(name));
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return buffer.str();
}

void WriteFile(const std::filesystem::path &path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace nomsupport
