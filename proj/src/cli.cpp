#include "stopgame/cli.hpp"

#include "stopgame/equilibrium.hpp"
#include "stopgame/gen.hpp"
#include "stopgame/io.hpp"
#include "stopgame/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace stopgame {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitDeviation = 2;

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  nlohmann::json doc;
  in >> doc;
  return doc;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  nlohmann::json doc;
  try {
    doc = read_json_file(path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  const auto diagnostics = check_game_json(doc);
  bool hard = false;
  for (const auto& d : diagnostics) {
    (d.error ? err : out) << (d.error ? "error: " : "") << d.message << "\n";
    hard |= d.error;
  }
  if (hard) return kExitInvalid;
  const GameSpec game = game_from_json(doc);
  out << "valid game: " << game.n_outcomes() << " outcomes, horizon " << game.horizon() << "\n";
  out << "condition X1 >= Y1: " << (game.condition9() ? "satisfied" : "violated (warning)")
      << "\n";
  return kExitOk;
}

int cmd_solve(const std::string& path, bool trace, bool verify, bool oracle,
              const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err) {
  GameSpec game = [&] { return game_from_json(read_json_file(path)); }();
  if (!game.condition9()) {
    err << "warning: X1 >= Y1 fails somewhere; solving anyway, no equilibrium guarantee\n";
  }
  const EquilibriumResult result = solve(game);

  std::optional<VerificationReport> fast_report, oracle_report;
  if (verify || oracle) {
    fast_report = verify_nash(game, result.tau_star, result.theta_star, VerifyMethod::kFastPath);
  }
  if (oracle) {
    oracle_report =
        verify_nash(game, result.tau_star, result.theta_star, VerifyMethod::kExhaustive);
    if (oracle_report->is_nash != fast_report->is_nash) {
      err << "error: fast-path and exhaustive verification disagree\n";
      return kExitInvalid;
    }
  }

  const auto doc = result_to_json(game, result, trace, fast_report, oracle_report);
  if (out_path) {
    write_text_file(*out_path, doc.dump(2) + "\n");
    out << "solved in " << result.iterations << " iterations";
    if (fast_report) out << (fast_report->is_nash ? "; verified Nash" : "; NOT an equilibrium");
    out << "; result written to " << *out_path << "\n";
  } else {
    out << doc.dump(2) << "\n";
  }
  if (fast_report && !fast_report->is_nash) return kExitDeviation;
  return kExitOk;
}

int cmd_gen(std::uint64_t seed, int outcomes, int horizon, bool condition9, bool symmetric,
            const std::string& out_path, std::ostream& out) {
  GenOptions options;
  options.seed = seed;
  options.outcomes = outcomes;
  options.horizon = horizon;
  options.ensure_condition9 = condition9;
  options.symmetric = symmetric;
  const GameSpec game = generate_game(options);
  write_text_file(out_path, game_to_json(game).dump(2) + "\n");
  out << "wrote " << game.name << " to " << out_path << "\n";
  return kExitOk;
}

int cmd_oracle(const std::string& game_path, const std::string& equilibrium_path,
               std::ostream& out, std::ostream& err) {
  const GameSpec game = game_from_json(read_json_file(game_path));
  const auto [tau, theta] = equilibrium_from_json(game, read_json_file(equilibrium_path));
  const auto report = verify_nash(game, tau, theta, VerifyMethod::kExhaustive);
  out << report_to_json(game, report).dump(2) << "\n";
  if (!report.is_nash) {
    err << "deviation found\n";
    return kExitDeviation;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact solver and verifier for two-player stopping games with one-sided "
               "information refinement"};
  app.require_subcommand(1);

  std::string game_path, equilibrium_path, out_path;
  bool trace = false, verify = false, oracle = false;
  bool condition9 = false, symmetric = false;
  std::uint64_t seed = 0;
  int outcomes = 2, horizon = 1;

  auto* validate = app.add_subcommand("validate", "check a game file and report diagnostics");
  validate->add_option("file", game_path, "game file")->required();

  auto* solve_cmd = app.add_subcommand("solve", "solve a game and optionally verify the result");
  solve_cmd->add_option("file", game_path, "game file")->required();
  solve_cmd->add_flag("--trace", trace, "include the full iteration trace");
  solve_cmd->add_flag("--verify", verify, "fast-path best-response verification");
  solve_cmd->add_flag("--oracle", oracle, "exhaustive verification as well");
  solve_cmd->add_option("--out", out_path, "write the result file here instead of stdout");

  auto* gen = app.add_subcommand("gen", "generate a random game file, deterministic in the seed");
  gen->add_option("--seed", seed, "generator seed")->required();
  gen->add_option("--outcomes", outcomes, "number of outcomes")->required();
  gen->add_option("--horizon", horizon, "horizon T")->required();
  gen->add_flag("--ensure-condition9", condition9, "force X1 >= Y1");
  gen->add_flag("--symmetric", symmetric, "give both players the same filtration");
  gen->add_option("--out", out_path, "output file")->required();

  auto* oracle_cmd =
      app.add_subcommand("oracle", "exhaustively verify an equilibrium file against a game");
  oracle_cmd->add_option("file", game_path, "game file")->required();
  oracle_cmd->add_option("--equilibrium", equilibrium_path, "result file to verify")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (validate->parsed()) return cmd_validate(game_path, out, err);
    if (solve_cmd->parsed()) {
      return cmd_solve(game_path, trace, verify, oracle,
                       out_path.empty() ? std::nullopt : std::optional<std::string>(out_path),
                       out, err);
    }
    if (gen->parsed()) return cmd_gen(seed, outcomes, horizon, condition9, symmetric, out_path, out);
    if (oracle_cmd->parsed()) return cmd_oracle(game_path, equilibrium_path, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace stopgame
