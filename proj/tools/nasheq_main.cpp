// Copyright 2026 The nasheq Authors
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
//
// Command-line front end. Exit codes: 0 success or accepted check, 1 check
// rejected or witness infeasible, 2 non-convergence or inconclusive witness,
// 3 input or configuration error. Results go to stdout, diagnostics to
// stderr.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "nasheq/convex_geometry.hpp"
#include "nasheq/equilibrium_solvers.hpp"
#include "nasheq/errors.hpp"
#include "nasheq/exact_oracle.hpp"
#include "nasheq/game_io.hpp"
#include "nasheq/game_model.hpp"
#include "nasheq/minimax_lab.hpp"
#include "nasheq/vec.hpp"

namespace {

nasheq::Vec parse_csv(const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string token = text.substr(start, end - start);
    char* parse_end = nullptr;
    const double value = std::strtod(token.c_str(), &parse_end);
    if (token.empty() || parse_end != token.c_str() + token.size() || !std::isfinite(value)) {
      throw nasheq::Error("bad number '" + token + "' in list '" + text + "'");
    }
    values.push_back(value);
    start = end + 1;
  }
  return nasheq::Vec(std::move(values));
}

std::string join_sig17(const nasheq::Vec& v) {
  std::string out;
  for (int i = 0; i < v.dim(); ++i) {
    if (i > 0) out += ' ';
    out += nasheq::format_sig17(v[i]);
  }
  return out;
}

const nasheq::ZeroSumGame& require_zero_sum(const nasheq::ParsedGame& parsed, const char* cmd) {
  const auto* game = std::get_if<nasheq::ZeroSumGame>(&parsed);
  if (game == nullptr) {
    throw nasheq::Error(std::string(cmd) + " needs a zerosum game file");
  }
  return *game;
}

nasheq::BimatrixGame as_bimatrix(const nasheq::ParsedGame& parsed) {
  if (const auto* zs = std::get_if<nasheq::ZeroSumGame>(&parsed)) return zs->to_bimatrix();
  return std::get<nasheq::BimatrixGame>(parsed);
}

nasheq::JointStrategy seeded_start(const nasheq::ProductSet& sets, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> p(static_cast<std::size_t>(sets.first.dim()));
  std::vector<double> q(static_cast<std::size_t>(sets.second.dim()));
  for (double& v : p) v = uniform(rng);
  for (double& v : q) v = uniform(rng);
  return {project(sets.first, nasheq::Vec(std::move(p))),
          project(sets.second, nasheq::Vec(std::move(q)))};
}

void print_trace(const nasheq::SolveResult& result) {
  if (!result.trace) return;
  for (const nasheq::TracePoint& point : *result.trace) {
    std::cerr << "trace: " << point.iteration << ' ' << nasheq::format_sig17(point.residual)
              << ' ' << nasheq::format_sig17(point.gap) << '\n';
  }
}

nasheq::SolutionMethod method_from_name(const std::string& name) {
  if (name == "extragradient") return nasheq::SolutionMethod::Extragradient;
  if (name == "krasnoselskii-mann") return nasheq::SolutionMethod::KrasnoselskiiMann;
  if (name == "fixed-point") return nasheq::SolutionMethod::FixedPoint;
  throw nasheq::ConfigError("unknown method '" + name + "'");
}

struct SolveArgs {
  std::string file;
  std::string method;  // empty picks per game kind
  double tol = 1e-6;
  long max_iters = 100000;
  double step = 0.0;
  std::uint64_t seed = 0;
  bool seeded = false;
  bool trace = false;
};

int run_solve(const SolveArgs& args) {
  const nasheq::ParsedGame parsed = nasheq::parse_game_file(args.file);

  nasheq::SolverConfig config;
  config.tol = args.tol;
  config.max_iters = args.max_iters;
  config.step = args.step;
  config.record_trace = args.trace;

  nasheq::SolveResult result = [&] {
    if (const auto* zs = std::get_if<nasheq::ZeroSumGame>(&parsed)) {
      const nasheq::ProductSet sets = simplex_domains(*zs);
      if (args.seeded) config.start = seeded_start(sets, args.seed);
      config.method = method_from_name(args.method.empty() ? "extragradient" : args.method);
      if (config.method == nasheq::SolutionMethod::FixedPoint) {
        return solve_bimatrix_heuristic(zs->to_bimatrix(), sets, config);
      }
      return solve_zero_sum(*zs, sets, config);
    }
    const auto& game = std::get<nasheq::BimatrixGame>(parsed);
    const nasheq::ProductSet sets = simplex_domains(game);
    if (args.seeded) config.start = seeded_start(sets, args.seed);
    config.method = method_from_name(args.method.empty() ? "krasnoselskii-mann" : args.method);
    return solve_bimatrix_heuristic(game, sets, config);
  }();

  print_trace(result);
  std::cout << serialize_result(result);
  return result.converged ? 0 : 2;
}

int run_enumerate(const std::string& file) {
  const nasheq::EquilibriumList list = enumerate_equilibria(as_bimatrix(nasheq::parse_game_file(file)));
  if (list.degenerate()) {
    std::cerr << "note: skipped " << list.degenerate_skips << " degenerate supports\n";
  }
  std::cout << serialize_result(list);
  return 0;
}

int run_verify(const std::string& file, const std::string& p_csv, const std::string& q_csv,
               double tol, int grid) {
  const nasheq::BimatrixGame game = as_bimatrix(nasheq::parse_game_file(file));
  const nasheq::JointStrategy z{parse_csv(p_csv), parse_csv(q_csv)};
  const nasheq::CheckResult check = check_nash(game, z, tol);
  std::cout << "accepted: " << (check.accepted ? "yes" : "no") << '\n';
  std::cout << "worst_violation: " << nasheq::format_sig17(check.worst_violation) << '\n';
  if (grid > 0) {
    std::cout << "grid_violation: " << nasheq::format_sig17(grid_nash_check(game, z, grid))
              << '\n';
  }
  return check.accepted ? 0 : 1;
}

int run_value(const std::string& file) {
  const nasheq::ParsedGame parsed = nasheq::parse_game_file(file);
  const double value = zero_sum_value(require_zero_sum(parsed, "value"));
  std::cout << "value: " << nasheq::format_sig17(value) << '\n';
  return 0;
}

struct ProjectArgs {
  std::string set_kind;
  std::string point;
  std::string lower;
  std::string upper;
  std::string center;
  double radius = 0.0;
};

int run_project(const ProjectArgs& args) {
  const nasheq::Vec x = parse_csv(args.point);
  const nasheq::ConvexSet set = [&] {
    if (args.set_kind == "simplex") return nasheq::ConvexSet::simplex(x.dim());
    if (args.set_kind == "box") {
      if (args.lower.empty() || args.upper.empty()) {
        throw nasheq::ConfigError("box projection needs --lower and --upper");
      }
      return nasheq::ConvexSet::box(parse_csv(args.lower), parse_csv(args.upper));
    }
    if (args.center.empty() || args.radius <= 0.0) {
      throw nasheq::ConfigError("ball projection needs --center and positive --radius");
    }
    return nasheq::ConvexSet::ball(parse_csv(args.center), args.radius);
  }();
  const nasheq::Vec w = project(set, x);
  std::cout << "projection: " << join_sig17(w) << '\n';
  std::cout << "distance: " << nasheq::format_sig17(norm(x - w)) << '\n';
  return 0;
}

nasheq::GridFunction grid_for(const nasheq::ZeroSumGame& game, int grid) {
  return grid > 0 ? nasheq::grid_from_bilinear(game.a(), grid)
                  : nasheq::grid_from_matrix(game.a());
}

int run_gap(const std::string& file, int grid) {
  const nasheq::ParsedGame parsed = nasheq::parse_game_file(file);
  const nasheq::WeakDuality duality =
      weak_duality_gap(grid_for(require_zero_sum(parsed, "gap"), grid));
  std::cout << "maxmin: " << nasheq::format_sig17(duality.maxmin) << '\n';
  std::cout << "minmax: " << nasheq::format_sig17(duality.minmax) << '\n';
  std::cout << "gap: " << nasheq::format_sig17(duality.gap) << '\n';
  return 0;
}

int run_witness(const std::string& file, double alpha, double tol, int grid) {
  const nasheq::ParsedGame parsed = nasheq::parse_game_file(file);
  const nasheq::DualWitnessResult result =
      dual_witness(grid_for(require_zero_sum(parsed, "witness"), grid), alpha, tol);
  switch (result.outcome) {
    case nasheq::WitnessOutcome::Found:
      std::cout << "outcome: found\n";
      std::cout << "beta: " << join_sig17(result.witness->beta) << '\n';
      std::cout << "alpha: " << nasheq::format_sig17(result.witness->alpha) << '\n';
      std::cout << "guarantee: " << nasheq::format_sig17(result.witness->guarantee) << '\n';
      return 0;
    case nasheq::WitnessOutcome::Infeasible:
      std::cout << "outcome: infeasible\n";
      if (result.violating_row) {
        std::cout << "violating_row: " << *result.violating_row << '\n';
      }
      if (result.value_lower_bound) {
        std::cout << "value_lower_bound: " << nasheq::format_sig17(*result.value_lower_bound)
                  << '\n';
      }
      return 1;
    case nasheq::WitnessOutcome::Inconclusive:
    default:
      std::cout << "outcome: inconclusive\n";
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-player game equilibrium toolkit", "nasheq"};
  app.require_subcommand(1);

  const std::vector<std::string> method_names{"extragradient", "krasnoselskii-mann",
                                              "fixed-point"};

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve a game iteratively");
  solve_cmd->add_option("file", solve_args.file, "game file")->required();
  solve_cmd->add_option("--tol", solve_args.tol, "target residual or duality gap");
  solve_cmd->add_option("--max-iters", solve_args.max_iters, "iteration budget");
  solve_cmd->add_option("--step", solve_args.step, "step size (0 picks one from the matrix norm)");
  solve_cmd->add_option("--method", solve_args.method, "iteration scheme")
      ->check(CLI::IsMember(method_names));
  solve_cmd->add_option("--seed", solve_args.seed, "seed for a random feasible starting point");
  solve_cmd->add_flag("--trace", solve_args.trace, "write per-iteration trace to stderr");

  std::string enumerate_file;
  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "list all equilibria by support enumeration");
  enumerate_cmd->add_option("file", enumerate_file, "game file")->required();

  std::string verify_file;
  std::string verify_p;
  std::string verify_q;
  double verify_tol = 1e-8;
  int verify_grid = 0;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a claimed equilibrium");
  verify_cmd->add_option("file", verify_file, "game file")->required();
  verify_cmd->add_option("--p", verify_p, "row strategy, comma separated")->required();
  verify_cmd->add_option("--q", verify_q, "column strategy, comma separated")->required();
  verify_cmd->add_option("--tol", verify_tol, "acceptance tolerance");
  verify_cmd->add_option("--grid", verify_grid, "also scan deviations on a simplex grid");

  std::string value_file;
  CLI::App* value_cmd = app.add_subcommand("value", "exact zero-sum game value");
  value_cmd->add_option("file", value_file, "game file")->required();

  ProjectArgs project_args;
  CLI::App* project_cmd = app.add_subcommand("project", "project a point onto a convex set");
  project_cmd->add_option("--set", project_args.set_kind, "set kind")
      ->required()
      ->check(CLI::IsMember({"simplex", "box", "ball"}));
  project_cmd->add_option("--point", project_args.point, "point, comma separated")->required();
  project_cmd->add_option("--lower", project_args.lower, "box lower corner");
  project_cmd->add_option("--upper", project_args.upper, "box upper corner");
  project_cmd->add_option("--center", project_args.center, "ball center");
  project_cmd->add_option("--radius", project_args.radius, "ball radius");

  std::string gap_file;
  int gap_grid = 0;
  CLI::App* gap_cmd = app.add_subcommand("gap", "weak-duality report for a zero-sum game");
  gap_cmd->add_option("file", gap_file, "game file")->required();
  gap_cmd->add_option("--grid", gap_grid, "evaluate on a mixed-strategy grid, points per edge");

  std::string witness_file;
  double witness_alpha = 0.0;
  double witness_tol = 1e-8;
  int witness_grid = 0;
  CLI::App* witness_cmd =
      app.add_subcommand("witness", "column mix capping every row at a level");
  witness_cmd->add_option("file", witness_file, "game file")->required();
  witness_cmd->add_option("--alpha", witness_alpha, "target level")->required();
  witness_cmd->add_option("--tol", witness_tol, "level tolerance");
  witness_cmd->add_option("--grid", witness_grid, "evaluate on a mixed-strategy grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*solve_cmd) {
      solve_args.seeded = solve_cmd->count("--seed") > 0;
      return run_solve(solve_args);
    }
    if (*enumerate_cmd) return run_enumerate(enumerate_file);
    if (*verify_cmd) return run_verify(verify_file, verify_p, verify_q, verify_tol, verify_grid);
    if (*value_cmd) return run_value(value_file);
    if (*project_cmd) return run_project(project_args);
    if (*gap_cmd) return run_gap(gap_file, gap_grid);
    if (*witness_cmd) return run_witness(witness_file, witness_alpha, witness_tol, witness_grid);
  } catch (const nasheq::NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nasheq::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 3;
}
