// Copyright 2026 The intsel Authors.
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


#ifndef INTSEL_STREAM_IO_H_
#define INTSEL_STREAM_IO_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "intsel/adversary.h"
#include "intsel/interval.h"

namespace intsel {

// Stream files:
//
//   intsel-stream 1
//   # comment
//   [0/1 10/1]
//   (1/2 3/2)
//
// One interval per line in arrival order; blank lines and lines starting
// with '#' are skipped. Coordinates are always written num/den.
inline constexpr std::string_view kStreamHeader = "intsel-stream 1";
inline constexpr std::string_view kSecretHeader = "intsel-secret 1";

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// A well-formed line whose left endpoint is not below its right endpoint.
class RangeError : public std::runtime_error {
 public:
  RangeError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// "[n/d n/d)" in lowest terms.
std::string format_interval(const Interval& iv);
// Parses one interval line; `line` is used for error messages only.
Interval parse_interval(std::string_view text, uint64_t arrival, int line = 0);

std::vector<Interval> parse_stream(std::string_view text);
std::string emit_stream(std::span<const Interval> stream);

// Reads a stream file one interval at a time.
class StreamReader {
 public:
  // Reads and checks the header. Throws ParseError.
  explicit StreamReader(std::istream& in);

  // The next interval, or nullopt at end of input. Throws ParseError or
  // RangeError.
  std::optional<Interval> Next();

 private:
  std::istream& in_;
  int line_ = 0;
  uint64_t arrivals_ = 0;
};

// Secret files:
//
//   intsel-secret 1
//   kind=unit-gadget n=4 size=3
//   pi=2,1,4,3 i=2
//   ...
//
// One pi=/i= record per phase.
std::string emit_secret(const GadgetSecret& secret);
GadgetSecret parse_secret(std::string_view text);

}  // namespace intsel

#endif  // INTSEL_STREAM_IO_H_
