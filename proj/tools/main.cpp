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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/result_document.hpp"

namespace {

using planeloc::cli::ProblemKind;

const std::map<std::string, ProblemKind> kKinds = {
    {"fermat", ProblemKind::kFermat}, {"chebyshev", ProblemKind::kChebyshev}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermat-Torricelli points and Chebyshev centers of planar point sets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", planeloc::cli::SolverVersion());

  planeloc::cli::SolveFlags solve_flags;
  std::string solve_input;
  std::optional<ProblemKind> solve_kind;
  auto* solve = app.add_subcommand("solve", "Solve and print a certified result document");
  solve->add_option("input", solve_input, "Problem file (JSON or CSV)")->required();
  solve->add_option("--kind", solve_kind, "fermat or chebyshev")
      ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case));
  solve->add_option("--tol", solve_flags.tol, "Relative residual tolerance");
  solve->add_option("--max-iter", solve_flags.max_iter, "Iteration budget for the general solver");
  solve->add_flag("--certificate-only", solve_flags.certificate_only,
                  "Print only the certificate");
  solve->add_option("--svg", solve_flags.svg_path, "Also write an SVG plot to this path");
  solve->add_flag("--oracle", solve_flags.oracle,
                  "Cross-check against the brute-force minimizer before printing");

  std::string certify_input;
  std::optional<ProblemKind> certify_kind;
  std::optional<double> certify_tol;
  std::string candidate_text;
  auto* certify = app.add_subcommand("certify", "Check whether a candidate point is optimal");
  certify->add_option("input", certify_input, "Problem file (JSON or CSV)")->required();
  certify->add_option("--kind", certify_kind, "fermat or chebyshev")
      ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case));
  certify->add_option("--tol", certify_tol, "Relative residual tolerance");
  certify->add_option("--point", candidate_text, "Candidate as X,Y")->required();

  std::string plot_input, plot_result, plot_output;
  auto* plot = app.add_subcommand("plot", "Draw a problem and a result document as SVG");
  plot->add_option("input", plot_input, "Problem file (JSON or CSV)")->required();
  plot->add_option("result", plot_result, "Result document from solve")->required();
  plot->add_option("output", plot_output, "SVG file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : planeloc::cli::kExitInput;
  }

  if (*solve) {
    solve_flags.kind = solve_kind;
    return planeloc::cli::RunSolve(solve_input, solve_flags, std::cout, std::cerr);
  }
  if (*certify) {
    const auto candidate = planeloc::cli::ParsePointArgument(candidate_text);
    if (!candidate) {
      std::cerr << "error: --point: expected X,Y\n";
      return planeloc::cli::kExitInput;
    }
    planeloc::cli::CertifyFlags flags{certify_kind, certify_tol, *candidate};
    return planeloc::cli::RunCertify(certify_input, flags, std::cout, std::cerr);
  }
  return planeloc::cli::RunPlot(plot_input, plot_result, plot_output, std::cerr);
}
