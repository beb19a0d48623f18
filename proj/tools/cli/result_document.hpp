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

// Result and certificate-check documents, serialized as JSON on stdout.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cli/problem_io.hpp"
#include "planeloc/chebyshev.hpp"
#include "planeloc/fermat.hpp"

namespace planeloc::cli {

struct CaseInfo {
  std::string tag;
  std::optional<std::size_t> index;
  std::optional<double> theta;
  std::optional<double> phi;

  bool operator==(const CaseInfo&) const = default;
};

struct CertificateInfo {
  std::string space;  // "l1" or "linf"
  std::vector<PlanarPoint> d;
  std::vector<double> t;
  double residual = 0.0;
  double slack = 0.0;
  bool holds = false;

  bool operator==(const CertificateInfo&) const = default;
};

struct ResultDocument {
  std::string solver_name = "planeloc";
  std::string solver_version;
  ProblemKind kind = ProblemKind::kFermat;
  CaseInfo case_info;
  /// Exactly one of these is set.
  std::optional<PlanarPoint> point;
  std::optional<std::array<PlanarPoint, 2>> segment;
  /// Objective for fermat, covering radius for chebyshev.
  double value = 0.0;
  std::vector<std::size_t> support;
  std::vector<double> hull_weights;
  CertificateInfo certificate;
  Tolerances tolerances;
  int iterations = 0;

  bool operator==(const ResultDocument& o) const;
};

struct CertifyReport {
  ProblemKind kind = ProblemKind::kFermat;
  PlanarPoint candidate;
  CertificateInfo certificate;
  Tolerances tolerances;

  bool operator==(const CertifyReport& o) const;
};

/// Library version string baked in at build time.
std::string SolverVersion();

CertificateInfo Describe(const SupportFunctionalCertificate& cert);

ResultDocument MakeDocument(const FtSolveResult& r, const Tolerances& tol);
ResultDocument MakeDocument(const ChebySolveResult& r, const Tolerances& tol);

std::string Serialize(const ResultDocument& doc);
std::string Serialize(const CertifyReport& report);
/// Certificate object alone, for --certificate-only.
std::string SerializeCertificate(const CertificateInfo& cert);

/// Throws InputError naming the offending field.
ResultDocument ParseResultDocument(std::string_view text);
CertifyReport ParseCertifyReport(std::string_view text);

}  // namespace planeloc::cli
