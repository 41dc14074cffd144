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


#include "intsel/stream_io.h"

#include <charconv>
#include <sstream>

namespace intsel {
namespace {

std::string_view Trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

bool Skippable(std::string_view line) {
  line = Trim(line);
  return line.empty() || line.front() == '#';
}

std::string Located(int line, const std::string& what) {
  return line > 0 ? "line " + std::to_string(line) + ": " + what : what;
}

Rational ParseCoordinate(std::string_view text, int line) {
  if (text.find('/') == std::string_view::npos) {
    throw ParseError(line, "coordinate '" + std::string(text) +
                               "' is not written num/den");
  }
  try {
    return Rational::Parse(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

// Walks the lines of a text buffer.
class Lines {
 public:
  explicit Lines(std::string_view text) : text_(text) {}

  bool Next(std::string_view& line) {
    if (pos_ > text_.size()) return false;
    auto end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    ++number_;
    if (pos_ > text_.size() && line.empty()) return false;
    return true;
  }
  int number() const { return number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int number_ = 0;
};

void ExpectHeader(std::string_view line, std::string_view header, int number) {
  if (Trim(line) != header) {
    throw ParseError(number, "expected header '" + std::string(header) + "'");
  }
}

int ParseInt(std::string_view text, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(line, "bad integer '" + std::string(text) + "'");
  }
  return value;
}

// Splits "key=value" fields separated by blanks.
std::vector<std::pair<std::string_view, std::string_view>> Fields(
    std::string_view line, int number) {
  std::vector<std::pair<std::string_view, std::string_view>> out;
  std::size_t pos = 0;
  line = Trim(line);
  while (pos < line.size()) {
    auto end = line.find(' ', pos);
    if (end == std::string_view::npos) end = line.size();
    std::string_view field = line.substr(pos, end - pos);
    pos = end + 1;
    if (field.empty()) continue;
    auto eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(number, "expected key=value, got '" +
                                   std::string(field) + "'");
    }
    out.emplace_back(field.substr(0, eq), field.substr(eq + 1));
  }
  return out;
}

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(Located(line, what)), line_(line) {}

RangeError::RangeError(int line, const std::string& what)
    : std::runtime_error(Located(line, what)), line_(line) {}

std::string format_interval(const Interval& iv) {
  std::string s = iv.lo.is_open() ? "(" : "[";
  s += iv.lo.coord.ToString();
  s += ' ';
  s += iv.hi.coord.ToString();
  s += iv.hi.is_open() ? ')' : ']';
  return s;
}

Interval parse_interval(std::string_view text, uint64_t arrival, int line) {
  text = Trim(text);
  if (text.size() < 2) throw ParseError(line, "empty interval");
  const char open = text.front();
  const char close = text.back();
  if (open != '[' && open != '(') {
    throw ParseError(line, "interval must start with '[' or '('");
  }
  if (close != ']' && close != ')') {
    throw ParseError(line, "interval must end with ']' or ')'");
  }
  std::string_view body = Trim(text.substr(1, text.size() - 2));
  const auto space = body.find_first_of(" \t");
  if (space == std::string_view::npos) {
    throw ParseError(line, "expected two coordinates");
  }
  std::string_view left_text = body.substr(0, space);
  std::string_view right_text = Trim(body.substr(space));
  if (right_text.find_first_of(" \t") != std::string_view::npos) {
    throw ParseError(line, "expected two coordinates");
  }
  Rational left = ParseCoordinate(left_text, line);
  Rational right = ParseCoordinate(right_text, line);
  if (!(left < right)) {
    throw RangeError(line, "left endpoint " + left.ToString() +
                               " is not below right endpoint " +
                               right.ToString());
  }
  return Interval::Make(left, open == '(' ? Openness::kOpen : Openness::kClosed,
                        right,
                        close == ')' ? Openness::kOpen : Openness::kClosed,
                        arrival);
}

std::vector<Interval> parse_stream(std::string_view text) {
  Lines lines(text);
  std::string_view line;
  bool header = false;
  std::vector<Interval> out;
  while (lines.Next(line)) {
    if (!header) {
      ExpectHeader(line, kStreamHeader, lines.number());
      header = true;
      continue;
    }
    if (Skippable(line)) continue;
    out.push_back(parse_interval(line, out.size(), lines.number()));
  }
  if (!header) throw ParseError(1, "missing header");
  return out;
}

std::string emit_stream(std::span<const Interval> stream) {
  std::string out(kStreamHeader);
  out += '\n';
  for (const Interval& iv : stream) {
    out += format_interval(iv);
    out += '\n';
  }
  return out;
}

StreamReader::StreamReader(std::istream& in) : in_(in) {
  std::string line;
  if (!std::getline(in_, line)) throw ParseError(1, "missing header");
  line_ = 1;
  ExpectHeader(line, kStreamHeader, line_);
}

std::optional<Interval> StreamReader::Next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (Skippable(line)) continue;
    return parse_interval(line, arrivals_++, line_);
  }
  return std::nullopt;
}

std::string emit_secret(const GadgetSecret& secret) {
  std::ostringstream out;
  out << kSecretHeader << '\n';
  out << "kind=" << ToString(secret.kind) << " n=" << secret.n
      << " size=" << secret.size << '\n';
  for (std::size_t t = 0; t < secret.phases(); ++t) {
    out << "pi=";
    for (std::size_t j = 0; j < secret.pi[t].size(); ++j) {
      out << (j ? "," : "") << secret.pi[t][j];
    }
    out << " i=" << secret.index[t] << '\n';
  }
  return out.str();
}

GadgetSecret parse_secret(std::string_view text) {
  Lines lines(text);
  std::string_view line;
  GadgetSecret secret;
  int stage = 0;
  while (lines.Next(line)) {
    const int number = lines.number();
    if (stage == 0) {
      ExpectHeader(line, kSecretHeader, number);
      stage = 1;
      continue;
    }
    if (Skippable(line)) continue;
    auto fields = Fields(line, number);
    if (stage == 1) {
      bool kind = false, n = false, size = false;
      for (auto [key, value] : fields) {
        if (key == "kind") {
          auto parsed = ParseGadgetKind(value);
          if (!parsed) throw ParseError(number, "unknown gadget kind");
          secret.kind = *parsed;
          kind = true;
        } else if (key == "n") {
          secret.n = ParseInt(value, number);
          n = true;
        } else if (key == "size") {
          secret.size = ParseInt(value, number);
          size = true;
        } else {
          throw ParseError(number, "unknown field '" + std::string(key) + "'");
        }
      }
      if (!kind || !n || !size) {
        throw ParseError(number, "expected kind=, n= and size=");
      }
      stage = 2;
      continue;
    }
    std::optional<std::vector<int>> pi;
    std::optional<int> index;
    for (auto [key, value] : fields) {
      if (key == "pi") {
        pi.emplace();
        std::size_t pos = 0;
        while (pos <= value.size()) {
          auto comma = value.find(',', pos);
          if (comma == std::string_view::npos) comma = value.size();
          pi->push_back(ParseInt(value.substr(pos, comma - pos), number));
          pos = comma + 1;
        }
      } else if (key == "i") {
        index = ParseInt(value, number);
      } else {
        throw ParseError(number, "unknown field '" + std::string(key) + "'");
      }
    }
    if (!pi || !index) throw ParseError(number, "expected pi= and i=");
    secret.pi.push_back(std::move(*pi));
    secret.index.push_back(*index);
  }
  if (stage < 2) throw ParseError(lines.number(), "incomplete secret");
  return secret;
}

}  // namespace intsel
