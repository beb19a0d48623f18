// Copyright 2026 The planeloc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Minimal pretty-printing JSON writer. Numbers are written with 17
// significant digits so every double reads back bit for bit.

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace planeloc::cli {

/// Shortest of %.17g-style output; "null" for non-finite values.
std::string FormatNumber(double v);

class JsonWriter {
 public:
  JsonWriter& BeginObject();
  JsonWriter& EndObject();
  JsonWriter& BeginArray();
  JsonWriter& EndArray();
  JsonWriter& Key(std::string_view key);

  JsonWriter& Value(double v);
  JsonWriter& Value(bool v);
  JsonWriter& Value(std::size_t v);
  JsonWriter& Value(std::string_view v);
  JsonWriter& Value(const char* v) { return Value(std::string_view(v)); }
  JsonWriter& Null();
  /// A flat numeric array on one line, e.g. a coordinate pair.
  JsonWriter& Numbers(std::span<const double> values);
  JsonWriter& Indices(std::span<const std::size_t> values);

  std::string str() const { return out_ + "\n"; }

 private:
  void BeforeValue();
  void Newline();
  void WriteString(std::string_view v);

  struct Frame {
    bool is_object;
    bool empty;
  };
  std::string out_;
  std::vector<Frame> stack_;
  bool after_key_ = false;
};

}  // namespace planeloc::cli
