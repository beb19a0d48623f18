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

#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>

#include "cli/json_writer.hpp"
#include "cli/result_document.hpp"
#include "cli/svg_plot.hpp"
#include "planeloc/chebyshev.hpp"
#include "planeloc/fermat.hpp"
#include "planeloc/geom.hpp"
#include "planeloc/oracle.hpp"

namespace planeloc::cli {

namespace {

struct Uncertified {
  std::string message;
};

ProblemKind ResolveKind(const ProblemFile& problem, std::optional<ProblemKind> flag) {
  if (flag) return *flag;
  if (problem.kind) return *problem.kind;
  throw InputError("kind: not given in the input; pass --kind fermat|chebyshev");
}

double ResolveTol(std::optional<double> tol) {
  if (!tol) return kEpsRel;
  if (!(*tol > 0.0) || !std::isfinite(*tol)) {
    throw InputError("--tol: must be a positive number");
  }
  return *tol;
}

bool WriteText(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  f << text;
  f.flush();
  return static_cast<bool>(f);
}

// Runs the certificate again on what is about to be emitted.
void Recheck(const ProblemFile& problem, const ResultDocument& doc) {
  if (doc.kind == ProblemKind::kFermat) {
    const WeightedConfiguration config(problem.points, problem.WeightsOrOnes());
    std::vector<PlanarPoint> probes;
    if (doc.point) probes.push_back(*doc.point);
    if (doc.segment) {
      const auto& s = *doc.segment;
      probes = {s[0], 0.5 * (s[0] + s[1]), s[1]};
    }
    for (PlanarPoint w : probes) {
      const FtCertificate cert = CertifyFermat(config, w, doc.tolerances.rel);
      if (!cert.pass()) {
        throw Uncertified{"optimality certificate fails at (" +
                          FormatNumber(w.real()) + ", " + FormatNumber(w.imag()) +
                          "): residual " + FormatNumber(cert.residual()) +
                          " exceeds slack " + FormatNumber(cert.slack())};
      }
    }
    return;
  }
  if (!doc.point) throw Uncertified{"chebyshev result without a center"};
  if (problem.points.size() == 1) {
    if (*doc.point != problem.points[0]) {
      throw Uncertified{"single point instance centred elsewhere"};
    }
    return;
  }
  const auto weights = problem.WeightsOrOnes();
  const auto cert = ChebyCertificate(problem.points, weights, *doc.point);
  if (!cert.holds) {
    throw Uncertified{"center certificate fails: origin is " +
                      FormatNumber(cert.residual) +
                      " away from the hull of farthest directions"};
  }
}

void OracleCrossCheck(const ProblemFile& problem, const ResultDocument& doc) {
  const auto weights = problem.WeightsOrOnes();
  const double diam = Diameter(problem.points);
  if (doc.kind == ProblemKind::kFermat) {
    const WeightedConfiguration config(problem.points, weights);
    const OracleResult o = OracleFt(config);
    const double allowance = 1e-6 * diam * config.TotalWeight();
    if (doc.value > o.value + allowance) {
      throw Uncertified{"oracle found a smaller objective: " + FormatNumber(o.value)};
    }
    return;
  }
  const OracleResult o = OracleCheby(problem.points, weights);
  const double allowance =
      1e-5 * diam * *std::max_element(weights.begin(), weights.end());
  if (std::abs(doc.value - o.value) > allowance) {
    throw Uncertified{"oracle radius " + FormatNumber(o.value) +
                      " disagrees with " + FormatNumber(doc.value)};
  }
}

ResultDocument SolveProblem(const ProblemFile& problem, ProblemKind kind,
                            const SolveFlags& flags, double tol) {
  const Tolerances tols{tol, kEpsClass};
  if (kind == ProblemKind::kFermat) {
    const WeightedConfiguration config(problem.points, problem.WeightsOrOnes());
    IterativeOptions options;
    options.tol = tol;
    if (flags.max_iter) options.max_iter = *flags.max_iter;
    try {
      return MakeDocument(SolveFermat(config, options), tols);
    } catch (const MaxIterationsExceeded& e) {
      throw Uncertified{"no certified optimum within the iteration budget; best residual " +
                        FormatNumber(e.certificate().residual())};
    }
  }
  if (problem.weights) {
    return MakeDocument(SolveChebyshevWeighted(problem.points, *problem.weights), tols);
  }
  return MakeDocument(SolveChebyshev(problem.points), tols);
}

}  // namespace

std::optional<PlanarPoint> ParsePointArgument(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return std::nullopt;
  double v[2];
  const std::string parts[2] = {text.substr(0, comma), text.substr(comma + 1)};
  for (int i = 0; i < 2; ++i) {
    const std::string& s = parts[i];
    const char* b = s.data();
    const char* e = s.data() + s.size();
    while (b < e && *b == ' ') ++b;
    while (e > b && e[-1] == ' ') --e;
    if (b < e && *b == '+') ++b;
    const auto res = std::from_chars(b, e, v[i]);
    if (b == e || res.ec != std::errc() || res.ptr != e) return std::nullopt;
  }
  return PlanarPoint(v[0], v[1]);
}

int RunSolve(const std::string& input_path, const SolveFlags& flags,
             std::ostream& out, std::ostream& err) {
  try {
    const ProblemFile problem = LoadProblem(input_path);
    const ProblemKind kind = ResolveKind(problem, flags.kind);
    const double tol = ResolveTol(flags.tol);
    if (flags.max_iter && *flags.max_iter < 1) {
      throw InputError("--max-iter: must be at least 1");
    }
    const ResultDocument doc = SolveProblem(problem, kind, flags, tol);
    Recheck(problem, doc);
    if (flags.oracle) OracleCrossCheck(problem, doc);
    if (flags.svg_path && !WriteText(*flags.svg_path, RenderSvg(problem, doc))) {
      err << "error: " << *flags.svg_path << ": cannot write\n";
      return kExitInput;
    }
    out << (flags.certificate_only ? SerializeCertificate(doc.certificate)
                                   : Serialize(doc));
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Uncertified& e) {
    err << "uncertified: " << e.message << "\n";
    return kExitUncertified;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

int RunCertify(const std::string& input_path, const CertifyFlags& flags,
               std::ostream& out, std::ostream& err) {
  try {
    const ProblemFile problem = LoadProblem(input_path);
    const ProblemKind kind = ResolveKind(problem, flags.kind);
    const double tol = ResolveTol(flags.tol);
    if (!IsFinite(flags.candidate)) throw InputError("--point: not finite");
    CertifyReport report;
    report.kind = kind;
    report.candidate = flags.candidate;
    report.tolerances = {tol, kEpsClass};
    if (kind == ProblemKind::kFermat) {
      const WeightedConfiguration config(problem.points, problem.WeightsOrOnes());
      report.certificate =
          Describe(CertifyFermat(config, flags.candidate, tol).functional);
    } else {
      report.certificate = Describe(
          ChebyCertificate(problem.points, problem.WeightsOrOnes(), flags.candidate));
    }
    out << Serialize(report);
    return report.certificate.holds ? kExitOk : kExitUncertified;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

int RunPlot(const std::string& input_path, const std::string& result_path,
            const std::string& svg_path, std::ostream& err) {
  try {
    const ProblemFile problem = LoadProblem(input_path);
    const ResultDocument doc = ParseResultDocument(ReadFile(result_path));
    Recheck(problem, doc);
    if (!WriteText(svg_path, RenderSvg(problem, doc))) {
      err << "error: " << svg_path << ": cannot write\n";
      return kExitInput;
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Uncertified& e) {
    err << "uncertified: " << e.message << "\n";
    return kExitUncertified;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace planeloc::cli
