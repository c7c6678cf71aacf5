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

#ifndef NOMSUPPORT_ERROR_H_
#define NOMSUPPORT_ERROR_H_

#include <stdexcept>
#include <string>

namespace nomsupport {

// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed caller-supplied value (bad lemma, bad data-file line).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Inconsistent or missing run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Unreadable input or unwritable output.
class IoError : public Error {
 public:
  using Error::Error;
};

// The corpus does not contain enough evidence for a stage to produce a
// result. Carries the name of the stage that gave up.
class InsufficientEvidence : public Error {
 public:
  InsufficientEvidence(std::string stage, const std::string &what)
      : Error(stage + ": insufficient evidence: " + what),
        stage_(std::move(stage)) {}

  const std::string &stage() const { return stage_; }

 private:
  std::string stage_;
};

// A pipeline stage was run before the stage producing its input.
class DependencyError : public Error {
 public:
  DependencyError(std::string missing, std::string run_first)
      : Error("missing intermediate " + missing + "; run `" + run_first +
              "` first"),
        missing_(std::move(missing)),
        run_first_(std::move(run_first)) {}

  const std::string &missing() const { return missing_; }
  const std::string &run_first() const { return run_first_; }

 private:
  std::string missing_;
  std::string run_first_;
};

}  // namespace nomsupport

#endif  // NOMSUPPORT_ERROR_H_
