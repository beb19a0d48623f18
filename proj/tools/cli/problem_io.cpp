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

#include "cli/problem_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nlohmann/json.hpp"
#include "planeloc/geom.hpp"

namespace planeloc::cli {

namespace {

using nlohmann::json;

std::string LineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

double RequireNumber(const json& v, const std::string& field) {
  if (!v.is_number()) throw InputError(field + ": expected a number");
  return v.get<double>();
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> ToDouble(std::string_view s) {
  s = Trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return v;
}

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

const char* ToString(ProblemKind kind) {
  return kind == ProblemKind::kFermat ? "fermat" : "chebyshev";
}

std::optional<ProblemKind> ParseKind(std::string_view text) {
  if (text == "fermat") return ProblemKind::kFermat;
  if (text == "chebyshev") return ProblemKind::kChebyshev;
  return std::nullopt;
}

std::vector<double> ProblemFile::WeightsOrOnes() const {
  return weights ? *weights : std::vector<double>(points.size(), 1.0);
}

ProblemFile ParseProblemJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at " + LineColumn(text, e.byte));
  }
  if (!doc.is_object()) throw InputError("top level: expected an object");

  ProblemFile problem;
  if (doc.contains("kind")) {
    const json& k = doc["kind"];
    if (!k.is_string() || !ParseKind(k.get<std::string>())) {
      throw InputError("kind: expected \"fermat\" or \"chebyshev\"");
    }
    problem.kind = ParseKind(k.get<std::string>());
  }
  if (!doc.contains("points")) throw InputError("points: missing");
  const json& pts = doc["points"];
  if (!pts.is_array()) throw InputError("points: expected an array of [x, y] pairs");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string field = "points[" + std::to_string(i) + "]";
    if (!pts[i].is_array() || pts[i].size() != 2) {
      throw InputError(field + ": expected an [x, y] pair");
    }
    problem.points.emplace_back(RequireNumber(pts[i][0], field + "[0]"),
                                RequireNumber(pts[i][1], field + "[1]"));
  }
  if (doc.contains("weights") && !doc["weights"].is_null()) {
    const json& w = doc["weights"];
    if (!w.is_array()) throw InputError("weights: expected an array of numbers");
    std::vector<double> weights;
    for (std::size_t i = 0; i < w.size(); ++i)
      weights.push_back(RequireNumber(w[i], "weights[" + std::to_string(i) + "]"));
    problem.weights = std::move(weights);
  }
  return problem;
}

ProblemFile ParseProblemCsv(std::string_view text) {
  ProblemFile problem;
  std::vector<double> weights;
  std::optional<bool> weighted;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no);
    const auto cells = SplitCommas(line);
    // A header row is allowed before the first data row.
    if (!seen_data && std::isalpha(static_cast<unsigned char>(Trim(cells[0]).front()))) {
      continue;
    }
    seen_data = true;
    if (cells.size() != 2 && cells.size() != 3) {
      throw InputError(where + ": expected x,y or x,y,weight");
    }
    const bool has_weight = cells.size() == 3;
    if (weighted && *weighted != has_weight) {
      throw InputError(where + ": weight column present on some rows only");
    }
    weighted = has_weight;
    std::array<double, 3> v{};
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto d = ToDouble(cells[c]);
      if (!d) {
        throw InputError(where + ", column " + std::to_string(c + 1) +
                         ": not a number: '" + std::string(Trim(cells[c])) + "'");
      }
      v[c] = *d;
    }
    problem.points.emplace_back(v[0], v[1]);
    if (has_weight) weights.push_back(v[2]);
  }
  if (weighted.value_or(false)) problem.weights = std::move(weights);
  return problem;
}

void ValidateProblem(const ProblemFile& problem) {
  if (problem.points.empty()) throw InputError("points: at least one point required");
  for (std::size_t i = 0; i < problem.points.size(); ++i) {
    if (!IsFinite(problem.points[i])) {
      throw InputError("points[" + std::to_string(i) + "]: not finite");
    }
  }
  if (problem.weights) {
    const auto& w = *problem.weights;
    if (w.size() != problem.points.size()) {
      throw InputError("weights: " + std::to_string(w.size()) + " entries for " +
                       std::to_string(problem.points.size()) + " points");
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!(w[i] > 0.0) || !std::isfinite(w[i])) {
        throw InputError("weights[" + std::to_string(i) + "]: must be positive");
      }
    }
  }
  const double band = kEpsClass * Diameter(problem.points);
  for (std::size_t i = 0; i < problem.points.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(problem.points[i] - problem.points[j]) <= band) {
        throw InputError("points[" + std::to_string(i) + "]: duplicates points[" +
                         std::to_string(j) + "]");
      }
    }
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProblemFile LoadProblem(const std::string& path) {
  const std::string text = ReadFile(path);
  const bool csv_ext = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  const std::string_view body = Trim(text);
  ProblemFile problem = (!csv_ext && !body.empty() && body.front() == '{')
                            ? ParseProblemJson(text)
                            : ParseProblemCsv(text);
  ValidateProblem(problem);
  return problem;
}

}  // namespace planeloc::cli
