// Copyright 2026 The spgraph Authors
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

#ifndef SPGRAPH_ERROR_HPP
#define SPGRAPH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spgraph {

/// Violated precondition: shape mismatch, out-of-range index, bad argument.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An incidence matrix row that does not hold exactly two unit entries.
class MalformedIncidence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A triangle reduction that was not divisible as the algorithm requires.
/// Signals an asymmetric, weighted, or self-looped adjacency matrix.
class InvalidAdjacency : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace spgraph

#endif  // SPGRAPH_ERROR_HPP
