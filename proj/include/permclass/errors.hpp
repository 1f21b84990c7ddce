// Copyright 2026 The permclass authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permclass {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidCircuit : Error {
  using Error::Error;
};

struct ContainsReset : Error {
  ContainsReset() : Error("circuit contains RESET gates") {}
};

struct TooManyQubits : Error {
  using Error::Error;
};

struct TooFewControls : Error {
  using Error::Error;
};

struct BadDimension : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotUnitary : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t line;
  ParseError(std::size_t line_no, const std::string& msg)
      : Error("parse error at line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

struct PipelineError : Error {
  std::size_t stage;
  PipelineError(std::size_t stage_index, const std::string& msg)
      : Error("pipeline stage " + std::to_string(stage_index) + ": " + msg),
        stage(stage_index) {}
};

}  // namespace permclass
