#include "stopgame/io.hpp"

#include "stopgame/verify.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace stopgame {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct RawGame {
  int horizon = 0;
  std::vector<std::string> ids;
  std::vector<Rational> probs;
  // cells[t] as outcome-index events, per filtration
  std::vector<std::vector<Event>> f_cells, g_cells;
  std::vector<std::vector<Rational>> x1, y1, x2, y2;  // [t][outcome]
  std::string name;
  std::optional<std::uint64_t> seed;
};

void add_error(std::vector<Diagnostic>& out, const std::string& message) {
  out.push_back({true, message});
}

// Parses the document shape into RawGame, collecting shape errors. Returns
// nullopt when the shape is too broken for semantic checks to make sense.
std::optional<RawGame> parse_shape(const json& doc, std::vector<Diagnostic>& out) {
  if (!doc.is_object()) {
    add_error(out, "game file must be a JSON object");
    return std::nullopt;
  }
  RawGame raw;
  if (!doc.contains("T") || !doc["T"].is_number_integer()) {
    add_error(out, "missing integer field 'T'");
    return std::nullopt;
  }
  raw.horizon = doc["T"].get<int>();
  if (raw.horizon < 1) {
    add_error(out, "'T' must be at least 1");
    return std::nullopt;
  }
  if (!doc.contains("outcomes") || !doc["outcomes"].is_array() || doc["outcomes"].empty()) {
    add_error(out, "missing nonempty array 'outcomes'");
    return std::nullopt;
  }
  std::map<std::string, int> index;
  for (const auto& item : doc["outcomes"]) {
    if (!item.is_object() || !item.contains("id") || !item["id"].is_string() ||
        !item.contains("prob") || !item["prob"].is_string()) {
      add_error(out, "each outcome needs a string 'id' and a rational string 'prob'");
      return std::nullopt;
    }
    const std::string id = item["id"].get<std::string>();
    if (!index.emplace(id, static_cast<int>(raw.ids.size())).second) {
      add_error(out, "duplicate outcome id '" + id + "'");
      return std::nullopt;
    }
    raw.ids.push_back(id);
    try {
      raw.probs.push_back(parse_rational(item["prob"].get<std::string>()));
    } catch (const std::invalid_argument& e) {
      add_error(out, std::string("outcome '") + id + "': " + e.what());
      return std::nullopt;
    }
  }

  const auto parse_filtration = [&](const char* key,
                                    std::vector<std::vector<Event>>& cells) -> bool {
    if (!doc.contains(key) || !doc[key].is_array() ||
        static_cast<int>(doc[key].size()) != raw.horizon + 1) {
      add_error(out, std::string("'") + key + "' must be a list of length T+1");
      return false;
    }
    for (const auto& level : doc[key]) {
      if (!level.is_array()) {
        add_error(out, std::string("'") + key + "' entries must be lists of cells");
        return false;
      }
      std::vector<Event> parsed_cells;
      for (const auto& cell : level) {
        if (!cell.is_array()) {
          add_error(out, std::string("'") + key + "' cells must be lists of outcome ids");
          return false;
        }
        Event parsed;
        for (const auto& id : cell) {
          if (!id.is_string() || index.find(id.get<std::string>()) == index.end()) {
            add_error(out, std::string("'") + key + "' refers to an unknown outcome id");
            return false;
          }
          parsed.push_back(index[id.get<std::string>()]);
        }
        parsed_cells.push_back(std::move(parsed));
      }
      cells.push_back(std::move(parsed_cells));
    }
    return true;
  };
  if (!parse_filtration("filtration_F", raw.f_cells)) return std::nullopt;
  if (!parse_filtration("filtration_G", raw.g_cells)) return std::nullopt;

  const auto parse_process = [&](const char* key, std::vector<std::vector<Rational>>& values) {
    if (!doc.contains(key) || !doc[key].is_array() ||
        static_cast<int>(doc[key].size()) != raw.horizon + 1) {
      add_error(out, std::string("'") + key + "' must be a list of length T+1");
      return false;
    }
    for (const auto& level : doc[key]) {
      if (!level.is_object()) {
        add_error(out, std::string("'") + key + "' entries must map outcome ids to rationals");
        return false;
      }
      std::vector<Rational> row(raw.ids.size(), Rational(0));
      std::set<std::string> seen;
      for (const auto& [id, value] : level.items()) {
        const auto it = index.find(id);
        if (it == index.end()) {
          add_error(out, std::string("'") + key + "' refers to unknown outcome id '" + id + "'");
          return false;
        }
        if (!value.is_string()) {
          add_error(out, std::string("'") + key + "' values must be rational strings");
          return false;
        }
        try {
          row[it->second] = parse_rational(value.get<std::string>());
        } catch (const std::invalid_argument& e) {
          add_error(out, std::string("'") + key + "': " + e.what());
          return false;
        }
        seen.insert(id);
      }
      if (seen.size() != raw.ids.size()) {
        add_error(out, std::string("'") + key + "' must give a value for every outcome");
        return false;
      }
      values.push_back(std::move(row));
    }
    return true;
  };
  if (!parse_process("X1", raw.x1)) return std::nullopt;
  if (!parse_process("Y1", raw.y1)) return std::nullopt;
  if (!parse_process("X2", raw.x2)) return std::nullopt;
  if (!parse_process("Y2", raw.y2)) return std::nullopt;

  if (doc.contains("name") && doc["name"].is_string()) raw.name = doc["name"].get<std::string>();
  if (doc.contains("seed") && doc["seed"].is_number_unsigned()) {
    raw.seed = doc["seed"].get<std::uint64_t>();
  }
  return raw;
}

// Semantic checks on a shape-valid raw game. Appends diagnostics; returns the
// constructed pieces when everything hard passed.
std::optional<GameSpec> check_semantics(const RawGame& raw, std::vector<Diagnostic>& out) {
  const int n = static_cast<int>(raw.ids.size());
  bool hard_failure = false;

  Rational total(0);
  bool probs_ok = true;
  for (int w = 0; w < n; ++w) {
    if (raw.probs[w] <= 0) {
      add_error(out, "outcome '" + raw.ids[w] + "': probability must be strictly positive");
      probs_ok = false;
    }
    total += raw.probs[w];
  }
  if (probs_ok && total != 1) {
    add_error(out, "probabilities must sum to 1 (got " + to_string(total) + ")");
    probs_ok = false;
  }
  hard_failure |= !probs_ok;

  const auto build_filtration = [&](const char* label, const std::vector<std::vector<Event>>& cells)
      -> std::optional<Filtration> {
    std::vector<Partition> parts;
    for (int t = 0; t < static_cast<int>(cells.size()); ++t) {
      try {
        parts.emplace_back(cells[t], n);
      } catch (const std::invalid_argument& e) {
        add_error(out, std::string(label) + " at t=" + std::to_string(t) + ": " + e.what());
        return std::nullopt;
      }
    }
    for (std::size_t t = 0; t + 1 < parts.size(); ++t) {
      if (!parts[t + 1].refines(parts[t])) {
        add_error(out,
                  std::string(label) + " not refining at t=" + std::to_string(t + 1));
        return std::nullopt;
      }
    }
    return Filtration(std::move(parts));
  };
  auto f = build_filtration("filtration_F", raw.f_cells);
  auto g = build_filtration("filtration_G", raw.g_cells);
  hard_failure |= !f.has_value() || !g.has_value();

  if (f && g) {
    for (int t = 0; t <= raw.horizon; ++t) {
      if (!f->at(t).refines(g->at(t))) {
        add_error(out, "filtration_G not coarser than filtration_F at t=" + std::to_string(t));
        hard_failure = true;
        break;
      }
    }
  }

  const auto check_adapted = [&](const char* label, const std::vector<std::vector<Rational>>& v,
                                 const std::optional<Filtration>& filt, const char* filt_label) {
    if (!filt) return;
    AdaptedProcess process;
    process.values = v;
    if (const auto bad_t = first_non_adapted_time(process, *filt)) {
      add_error(out, std::string(label) + " not " + filt_label +
                         "-adapted at t=" + std::to_string(*bad_t));
      hard_failure = true;
    }
  };
  check_adapted("X1", raw.x1, f, "F");
  check_adapted("Y1", raw.y1, f, "F");
  check_adapted("X2", raw.x2, g, "G");
  check_adapted("Y2", raw.y2, g, "G");

  if (hard_failure) return std::nullopt;

  GameSpec game{SampleSpace(raw.ids, raw.probs),
                std::move(*f),
                std::move(*g),
                AdaptedProcess{},
                AdaptedProcess{},
                AdaptedProcess{},
                AdaptedProcess{},
                raw.name,
                raw.seed};
  game.x1.values = raw.x1;
  game.y1.values = raw.y1;
  game.x2.values = raw.x2;
  game.y2.values = raw.y2;
  game.validate();

  if (!game.condition9()) {
    out.push_back({false, "warning: X1 >= Y1 fails somewhere; no equilibrium guarantee"});
  }
  return game;
}

}  // namespace

std::vector<Diagnostic> check_game_json(const json& doc) {
  std::vector<Diagnostic> out;
  const auto raw = parse_shape(doc, out);
  if (raw) check_semantics(*raw, out);
  return out;
}

GameSpec game_from_json(const json& doc) {
  std::vector<Diagnostic> diags;
  const auto raw = parse_shape(doc, diags);
  std::optional<GameSpec> game;
  if (raw) game = check_semantics(*raw, diags);
  if (!game) {
    for (const auto& d : diags) {
      if (d.error) throw std::invalid_argument(d.message);
    }
    throw std::invalid_argument("invalid game file");
  }
  return std::move(*game);
}

ordered_json game_to_json(const GameSpec& game) {
  ordered_json doc;
  doc["T"] = game.horizon();
  ordered_json outcomes = ordered_json::array();
  for (Outcome w = 0; w < game.n_outcomes(); ++w) {
    outcomes.push_back({{"id", game.space.id(w)}, {"prob", to_string(game.space.prob(w))}});
  }
  doc["outcomes"] = std::move(outcomes);
  const auto filtration_json = [&](const Filtration& filt) {
    ordered_json levels = ordered_json::array();
    for (int t = 0; t <= filt.horizon(); ++t) {
      ordered_json cells = ordered_json::array();
      for (const Event& cell : filt.at(t).cells()) {
        ordered_json ids = ordered_json::array();
        for (Outcome w : cell) ids.push_back(game.space.id(w));
        cells.push_back(std::move(ids));
      }
      levels.push_back(std::move(cells));
    }
    return levels;
  };
  doc["filtration_F"] = filtration_json(game.f);
  doc["filtration_G"] = filtration_json(game.g);
  const auto process_json = [&](const AdaptedProcess& process) {
    ordered_json levels = ordered_json::array();
    for (int t = 0; t <= process.horizon(); ++t) {
      ordered_json row = ordered_json::object();
      for (Outcome w = 0; w < game.n_outcomes(); ++w) {
        row[game.space.id(w)] = to_string(process.at(t, w));
      }
      levels.push_back(std::move(row));
    }
    return levels;
  };
  doc["X1"] = process_json(game.x1);
  doc["Y1"] = process_json(game.y1);
  doc["X2"] = process_json(game.x2);
  doc["Y2"] = process_json(game.y2);
  if (!game.name.empty()) doc["name"] = game.name;
  if (game.seed) doc["seed"] = *game.seed;
  return doc;
}

ordered_json stopping_time_to_json(const GameSpec& game, const StoppingTime& rule) {
  ordered_json doc = ordered_json::object();
  for (Outcome w = 0; w < game.n_outcomes(); ++w) doc[game.space.id(w)] = rule.at(w);
  return doc;
}

StoppingTime stopping_time_from_json(const GameSpec& game, const json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("stopping time must be an id -> time object");
  std::vector<int> times(game.n_outcomes(), -1);
  for (const auto& [id, value] : doc.items()) {
    const auto w = game.space.index_of(id);
    if (!w) throw std::invalid_argument("stopping time refers to unknown outcome '" + id + "'");
    if (!value.is_number_integer()) throw std::invalid_argument("stopping time values must be integers");
    const int t = value.get<int>();
    if (t < 0 || t > game.horizon()) {
      throw std::invalid_argument("stopping time value out of [0, T]");
    }
    times[*w] = t;
  }
  for (int t : times) {
    if (t < 0) throw std::invalid_argument("stopping time must cover every outcome");
  }
  return StoppingTime(std::move(times));
}

ordered_json report_to_json(const GameSpec& game, const VerificationReport& report) {
  ordered_json doc;
  doc["method"] = to_string(report.method);
  doc["j1_achieved"] = to_string(report.j1_achieved);
  doc["j1_best"] = to_string(report.j1_best);
  doc["j2_achieved"] = to_string(report.j2_achieved);
  doc["j2_best"] = to_string(report.j2_best);
  doc["is_nash"] = report.is_nash;
  if (report.p1_deviation) doc["p1_deviation"] = stopping_time_to_json(game, *report.p1_deviation);
  if (report.p2_deviation) doc["p2_deviation"] = stopping_time_to_json(game, *report.p2_deviation);
  return doc;
}

ordered_json result_to_json(const GameSpec& game, const EquilibriumResult& result,
                            bool include_trace, const std::optional<VerificationReport>& report,
                            const std::optional<VerificationReport>& oracle_report) {
  ordered_json doc;
  if (!game.name.empty()) doc["game"] = game.name;
  doc["tau_star"] = stopping_time_to_json(game, result.tau_star);
  doc["nu_star"] = stopping_time_to_json(game, result.nu_star);
  doc["theta_star"] = stopping_time_to_json(game, result.theta_star);
  doc["iterations"] = result.iterations;
  doc["j1"] = to_string(j1(game, result.tau_star, result.theta_star));
  doc["j2"] = to_string(j2(game, result.tau_star, result.theta_star));
  if (include_trace) {
    ordered_json trace = ordered_json::array();
    for (const IterationState& state : result.trace) {
      ordered_json entry;
      entry["n"] = state.n;
      entry["tau"] = stopping_time_to_json(game, state.tau);
      entry["nu"] = stopping_time_to_json(game, state.nu);
      if (!state.thetas.empty()) entry["theta"] = stopping_time_to_json(game, state.thetas.back());
      if (state.tau_tilde) entry["tau_tilde"] = stopping_time_to_json(game, *state.tau_tilde);
      if (state.nu_tilde) entry["nu_tilde"] = stopping_time_to_json(game, *state.nu_tilde);
      trace.push_back(std::move(entry));
    }
    doc["trace"] = std::move(trace);
  }
  if (report) doc["report"] = report_to_json(game, *report);
  if (oracle_report) doc["oracle_report"] = report_to_json(game, *oracle_report);
  return doc;
}

std::pair<StoppingTime, StoppingTime> equilibrium_from_json(const GameSpec& game,
                                                            const json& doc) {
  if (!doc.is_object() || !doc.contains("tau_star") || !doc.contains("theta_star")) {
    throw std::invalid_argument("equilibrium file needs 'tau_star' and 'theta_star'");
  }
  return {stopping_time_from_json(game, doc["tau_star"]),
          stopping_time_from_json(game, doc["theta_star"])};
}

}  // namespace stopgame
