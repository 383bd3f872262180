// Copyright 2026 The rsd Authors
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

#pragma once

#include <filesystem>
#include <string>

#include "rsd/analysis/export.hpp"

namespace rsd::cli {

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(const std::string& bytes);

/// Whole file as bytes. Throws Error(kIo).
std::string read_file(const std::filesystem::path& path);

/// Writes files into one output directory, creating it on construction.
class OutputWriter {
 public:
  /// Throws Error(kIo) when the directory cannot be created.
  explicit OutputWriter(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  void write_text(const std::string& name, const std::string& content) const;
  /// Pretty-printed with two-space indentation and a trailing newline.
  void write_json(const std::string& name, const analysis::Json& json) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace rsd::cli
