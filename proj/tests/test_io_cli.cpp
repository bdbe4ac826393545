#include "stopgame/io.hpp"

#include "stopgame/cli.hpp"
#include "stopgame/gen.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace stopgame;
using stopgame::testing::game_s;

namespace {

// writes under the build tree's working directory; removed per test
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("tmp_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
  void write(const std::string& text) const {
    std::ofstream out(path);
    out << text;
  }
  std::string read() const {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
};

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

bool same_game(const GameSpec& a, const GameSpec& b) {
  return a.space == b.space && a.f == b.f && a.g == b.g && a.x1 == b.x1 && a.y1 == b.y1 &&
         a.x2 == b.x2 && a.y2 == b.y2;
}

}  // namespace

TEST_CASE("game files round-trip losslessly") {
  for (std::uint64_t seed = 4000; seed < 4030; ++seed) {
    GenOptions options;
    options.seed = seed;
    options.outcomes = 2 + static_cast<int>(seed % 6);
    options.horizon = 1 + static_cast<int>(seed % 3);
    options.ensure_condition9 = seed % 2 == 0;
    const auto game = generate_game(options);
    const auto doc = game_to_json(game);
    const auto parsed = game_from_json(nlohmann::json::parse(doc.dump()));
    CHECK(same_game(game, parsed));
    CHECK(game_to_json(parsed) == doc);
  }
}

TEST_CASE("rationals serialize exactly, never as floats") {
  const auto doc = game_to_json(game_s());
  CHECK(doc["outcomes"][0]["prob"] == "1/2");
  CHECK(doc["X1"][0]["a"] == "2");
}

TEST_CASE("diagnostics: probabilities that do not sum to 1") {
  auto doc = game_to_json(game_s());
  doc["outcomes"][0]["prob"] = "3/2";
  const auto diagnostics = check_game_json(doc);
  REQUIRE_FALSE(diagnostics.empty());
  bool found = false;
  for (const auto& d : diagnostics) {
    found |= d.error && d.message.find("probabilities must sum to 1") != std::string::npos;
  }
  CHECK(found);
  CHECK_THROWS_AS(game_from_json(doc), std::invalid_argument);
}

TEST_CASE("diagnostics: a process that is not adapted") {
  auto doc = game_to_json(game_s());
  doc["X2"][1]["a"] = "9";  // G is trivial at t=1, so x2_1 must be constant
  const auto diagnostics = check_game_json(doc);
  bool found = false;
  for (const auto& d : diagnostics) {
    found |= d.error && d.message.find("X2 not G-adapted at t=1") != std::string::npos;
  }
  CHECK(found);
}

TEST_CASE("diagnostics: G must be coarser than F") {
  auto doc = game_to_json(game_s());
  doc["filtration_G"] = doc["filtration_F"];
  doc["filtration_F"] = nlohmann::json::parse(R"([[["a","b"]],[["a","b"]]])");
  const auto diagnostics = check_game_json(doc);
  bool found = false;
  for (const auto& d : diagnostics) {
    found |= d.error && d.message.find("not coarser") != std::string::npos;
  }
  CHECK(found);
}

TEST_CASE("condition x1 >= y1 is reported as a warning, not an error") {
  auto doc = game_to_json(game_s());
  doc["Y1"][0]["a"] = "10";
  doc["Y1"][0]["b"] = "10";
  const auto diagnostics = check_game_json(doc);
  bool warned = false;
  for (const auto& d : diagnostics) {
    CHECK_FALSE(d.error);
    warned |= d.message.find("X1 >= Y1") != std::string::npos;
  }
  CHECK(warned);
  CHECK_NOTHROW(game_from_json(doc));
}

TEST_CASE("cli: validate") {
  TempFile file("validate.json");
  file.write(game_to_json(game_s()).dump());
  std::string out;
  CHECK(run({"validate", file.path}, &out) == 0);
  CHECK(out.find("condition X1 >= Y1: satisfied") != std::string::npos);

  TempFile bad("validate_bad.json");
  auto doc = game_to_json(game_s());
  doc["outcomes"][0]["prob"] = "1";
  bad.write(doc.dump());
  std::string err;
  CHECK(run({"validate", bad.path}, &out, &err) == 1);
  CHECK(err.find("probabilities must sum to 1") != std::string::npos);

  CHECK(run({"validate", "no_such_file.json"}, &out, &err) == 1);
}

TEST_CASE("cli: solve game-s, verified, with trace") {
  TempFile game_file("solve.json");
  game_file.write(game_to_json(game_s()).dump());
  TempFile result_file("solve_result.json");
  std::string out;
  const int code = run(
      {"solve", game_file.path, "--trace", "--verify", "--oracle", "--out", result_file.path},
      &out);
  CHECK(code == 0);
  CHECK(out.find("verified Nash") != std::string::npos);

  const auto doc = nlohmann::json::parse(result_file.read());
  CHECK(doc["tau_star"]["a"] == 0);
  CHECK(doc["tau_star"]["b"] == 0);
  CHECK(doc["nu_star"]["a"] == 1);
  CHECK(doc["theta_star"]["a"] == 1);
  CHECK(doc["iterations"] == 3);
  CHECK(doc["j1"] == "2");
  CHECK(doc["j2"] == "1");
  CHECK(doc["trace"].size() == 4);  // stages n = 1..4
  CHECK(doc["report"]["is_nash"] == true);
  CHECK(doc["report"]["method"] == "fast-path");
  CHECK(doc["oracle_report"]["is_nash"] == true);
}

TEST_CASE("cli: solve flags a non-equilibrium candidate with exit code 2") {
  // make the game hostile to the construction's guarantee: x1 < y1
  TempFile game_file("solve_viol.json");
  auto doc = game_to_json(game_s());
  doc["Y1"][0]["a"] = "100";
  doc["Y1"][0]["b"] = "100";
  doc["Y1"][1]["a"] = "100";
  doc["Y1"][1]["b"] = "100";
  game_file.write(doc.dump());
  std::string out, err;
  const int code = run({"solve", game_file.path, "--verify"}, &out, &err);
  CHECK(err.find("warning") != std::string::npos);
  // the solver still runs; verification decides the exit code
  CHECK((code == 0 || code == 2));
  const int quiet = run({"solve", game_file.path}, &out, &err);
  CHECK(quiet == 0);  // without --verify there is nothing to fail
}

TEST_CASE("cli: gen is deterministic and honors its flags") {
  TempFile first("gen1.json"), second("gen2.json");
  const std::vector<std::string> args = {"gen",  "--seed", "7",         "--outcomes", "5",
                                         "--horizon", "3", "--ensure-condition9", "--out", ""};
  auto with_out = [&](const std::string& path) {
    auto a = args;
    a.back() = path;
    return a;
  };
  CHECK(run(with_out(first.path)) == 0);
  CHECK(run(with_out(second.path)) == 0);
  CHECK(first.read() == second.read());

  const auto game = game_from_json(nlohmann::json::parse(first.read()));
  CHECK(game.condition9());
  CHECK(game.n_outcomes() == 5);
  CHECK(game.horizon() == 3);

  TempFile sym("gen_sym.json");
  CHECK(run({"gen", "--seed", "9", "--outcomes", "4", "--horizon", "2", "--symmetric", "--out",
             sym.path}) == 0);
  const auto sym_game = game_from_json(nlohmann::json::parse(sym.read()));
  CHECK(refines(sym_game.f, sym_game.g));
  CHECK(refines(sym_game.g, sym_game.f));
}

TEST_CASE("cli: oracle re-checks a result file") {
  TempFile game_file("oracle_game.json");
  game_file.write(game_to_json(game_s()).dump());
  TempFile result_file("oracle_result.json");
  REQUIRE(run({"solve", game_file.path, "--out", result_file.path}) == 0);
  std::string out;
  CHECK(run({"oracle", game_file.path, "--equilibrium", result_file.path}, &out) == 0);
  CHECK(out.find("\"is_nash\": true") != std::string::npos);

  // tamper with the equilibrium: make player 1 wait, player 2 stop at 0
  auto doc = nlohmann::json::parse(result_file.read());
  doc["tau_star"]["a"] = 1;
  doc["tau_star"]["b"] = 1;
  doc["theta_star"]["a"] = 0;
  doc["theta_star"]["b"] = 0;
  TempFile tampered("oracle_tampered.json");
  tampered.write(doc.dump());
  std::string err;
  const int code = run({"oracle", game_file.path, "--equilibrium", tampered.path}, &out, &err);
  CHECK(code == 2);
  CHECK(out.find("\"is_nash\": false") != std::string::npos);
}

TEST_CASE("cli: unknown arguments and missing subcommand are invalid") {
  std::string out, err;
  CHECK(run({"bogus"}, &out, &err) == 1);
  CHECK(run({}, &out, &err) == 1);
  CHECK(run({"solve"}, &out, &err) == 1);
}
