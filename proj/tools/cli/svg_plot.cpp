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

#include "cli/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cli/json_writer.hpp"

namespace planeloc::cli {

namespace {

std::string N(double v) { return FormatNumber(v); }

// Flip y so that the picture has the usual orientation.
std::string X(PlanarPoint p) { return N(p.real()); }
std::string Y(PlanarPoint p) { return N(-p.imag()); }

}  // namespace

std::string RenderSvg(const ProblemFile& problem, const ResultDocument& doc) {
  double lo_x = problem.points[0].real(), hi_x = lo_x;
  double lo_y = problem.points[0].imag(), hi_y = lo_y;
  auto grow = [&](PlanarPoint p, double r) {
    lo_x = std::min(lo_x, p.real() - r);
    hi_x = std::max(hi_x, p.real() + r);
    lo_y = std::min(lo_y, p.imag() - r);
    hi_y = std::max(hi_y, p.imag() + r);
  };
  for (PlanarPoint p : problem.points) grow(p, 0.0);
  if (doc.point) grow(*doc.point, doc.kind == ProblemKind::kChebyshev ? doc.value : 0.0);
  if (doc.segment) {
    grow((*doc.segment)[0], 0.0);
    grow((*doc.segment)[1], 0.0);
  }
  double extent = std::max(hi_x - lo_x, hi_y - lo_y);
  if (extent == 0.0) extent = 1.0;
  const double margin = 0.08 * extent;
  const double stroke = 0.004 * extent;
  const double marker = 0.012 * extent;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << N(lo_x - margin) << ' ' << N(-hi_y - margin) << ' '
      << N(hi_x - lo_x + 2 * margin) << ' ' << N(hi_y - lo_y + 2 * margin)
      << "\">\n";
  svg << "  <title>" << ToString(doc.kind) << " " << doc.case_info.tag << "</title>\n";
  svg << "  <g fill=\"none\" stroke-width=\"" << N(stroke) << "\">\n";

  if (doc.kind == ProblemKind::kChebyshev && doc.point) {
    svg << "    <circle class=\"support-circle\" cx=\"" << X(*doc.point) << "\" cy=\""
        << Y(*doc.point) << "\" r=\"" << N(doc.value) << "\" stroke=\"#1f77b4\"/>\n";
  }
  if (doc.kind == ProblemKind::kFermat && doc.point) {
    for (PlanarPoint p : problem.points) {
      if (std::abs(p - *doc.point) <= kEpsClass * extent) continue;
      svg << "    <line class=\"ray\" x1=\"" << X(*doc.point) << "\" y1=\""
          << Y(*doc.point) << "\" x2=\"" << X(p) << "\" y2=\"" << Y(p)
          << "\" stroke=\"#7f7f7f\"/>\n";
    }
  }
  if (doc.segment) {
    const auto& s = *doc.segment;
    svg << "    <line class=\"solution-segment\" x1=\"" << X(s[0]) << "\" y1=\""
        << Y(s[0]) << "\" x2=\"" << X(s[1]) << "\" y2=\"" << Y(s[1])
        << "\" stroke=\"#d62728\" stroke-width=\"" << N(3 * stroke) << "\"/>\n";
  }
  svg << "  </g>\n";

  svg << "  <g stroke=\"none\">\n";
  for (std::size_t i = 0; i < problem.points.size(); ++i) {
    const bool in_support =
        doc.kind == ProblemKind::kChebyshev &&
        std::find(doc.support.begin(), doc.support.end(), i) != doc.support.end();
    const PlanarPoint p = problem.points[i];
    svg << "    <rect class=\"" << (in_support ? "point support" : "point")
        << "\" x=\"" << N(p.real() - marker) << "\" y=\"" << N(-p.imag() - marker)
        << "\" width=\"" << N(2 * marker) << "\" height=\"" << N(2 * marker)
        << "\" fill=\"" << (in_support ? "#1f77b4" : "#000000") << "\"/>\n";
  }
  if (doc.point) {
    const PlanarPoint w = *doc.point;
    const double m = 1.5 * marker;
    svg << "    <polygon class=\"solution\" points=\"" << N(w.real()) << ','
        << N(-w.imag() - m) << ' ' << N(w.real() + m) << ',' << N(-w.imag()) << ' '
        << N(w.real()) << ',' << N(-w.imag() + m) << ' ' << N(w.real() - m) << ','
        << N(-w.imag()) << "\" fill=\"#d62728\"/>\n";
  }
  svg << "  </g>\n</svg>\n";
  return svg.str();
}

}  // namespace planeloc::cli
