// Copyright 2026 The zdgame Authors
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

#include "run_config.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "zdgame/zdgame.h"

namespace zdgame::cli {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& key, const std::string& what) {
  throw ConfigError("config key '" + key + "': " + what);
}

double Number(const json& v, const std::string& key) {
  if (!v.is_number()) Fail(key, "expected a number");
  return v.get<double>();
}

std::uint64_t Unsigned(const json& v, const std::string& key) {
  if (!v.is_number_unsigned()) Fail(key, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::string String(const json& v, const std::string& key) {
  if (!v.is_string()) Fail(key, "expected a string");
  return v.get<std::string>();
}

const json& Object(const json& v, const std::string& key) {
  if (!v.is_object()) Fail(key, "expected an object");
  return v;
}

// Line and column (1-based) of a byte offset.
std::pair<int, int> Locate(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void ParseZd(const json& obj, ZdBlock& zd) {
  for (const auto& [key, v] : Object(obj, "zd").items()) {
    const std::string path = "zd." + key;
    if (key == "p1") zd.p1 = Number(v, path);
    else if (key == "p4") zd.p4 = Number(v, path);
    else if (key == "s") zd.s = Number(v, path);
    else if (key == "phi") zd.phi = Number(v, path);
    else if (key == "alpha") zd.alpha = Number(v, path);
    else if (key == "beta") zd.beta = Number(v, path);
    else if (key == "gamma") zd.gamma = Number(v, path);
    else Fail(path, "unknown key");
  }
}

void ParseRstp(const json& obj, RstpBlock& b) {
  bool seen[4] = {false, false, false, false};
  for (const auto& [key, v] : Object(obj, "rstp").items()) {
    const std::string path = "rstp." + key;
    if (key == "R") { b.R = Number(v, path); seen[0] = true; }
    else if (key == "S") { b.S = Number(v, path); seen[1] = true; }
    else if (key == "T") { b.T = Number(v, path); seen[2] = true; }
    else if (key == "P") { b.P = Number(v, path); seen[3] = true; }
    else Fail(path, "unknown key");
  }
  for (bool s : seen) {
    if (!s) Fail("rstp", "needs all of R, S, T, P");
  }
}

void ParseRc(const json& obj, RcBlock& b) {
  bool seen_r = false, seen_c = false;
  for (const auto& [key, v] : Object(obj, "rc").items()) {
    const std::string path = "rc." + key;
    if (key == "r") { b.r = Number(v, path); seen_r = true; }
    else if (key == "c") { b.c = Number(v, path); seen_c = true; }
    else Fail(path, "unknown key");
  }
  if (!seen_r || !seen_c) Fail("rc", "needs both r and c");
}

bool IsZdKind(const std::string& name) {
  return name == "zd-set" || name == "zd-extortion" || name == "linear";
}

bool IsRegistryName(const std::string& name) {
  for (std::size_t i = 0; i < zdg_named_strategy_count(); ++i) {
    if (name == zdg_named_strategy_name(i)) return true;
  }
  return false;
}

}  // namespace

RunConfig ParseConfig(const std::string& json_text, bool validate) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = Locate(json_text, e.byte == 0 ? 0 : e.byte - 1);
    std::ostringstream msg;
    msg << "config parse error at line " << line << ", column " << col << ": "
        << e.what();
    throw ConfigError(msg.str());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  RunConfig cfg;
  for (const auto& [key, v] : doc.items()) {
    if (key == "figure") {
      if (!v.is_number_integer()) Fail(key, "expected an integer");
      cfg.figure = v.get<int>();
    } else if (key == "strategy") {
      cfg.strategy = String(v, key);
    } else if (key == "p") {
      if (!v.is_array() || v.size() != 4) Fail(key, "expected 4 numbers");
      std::array<double, 4> p{};
      for (int i = 0; i < 4; ++i) p[i] = Number(v[i], key);
      cfg.p = p;
    } else if (key == "zd") {
      ParseZd(v, cfg.zd);
    } else if (key == "rstp") {
      ParseRstp(v, cfg.rstp.emplace());
    } else if (key == "rc") {
      ParseRc(v, cfg.rc.emplace());
    } else if (key == "m") {
      cfg.m = Number(v, key);
    } else if (key == "n_opponents") {
      cfg.n_opponents = Unsigned(v, key);
    } else if (key == "mode") {
      cfg.mode = String(v, key);
    } else if (key == "rounds") {
      cfg.rounds = Unsigned(v, key);
    } else if (key == "seed") {
      cfg.seed = Unsigned(v, key);
    } else if (key == "workers") {
      const std::uint64_t w = Unsigned(v, key);
      if (w > std::numeric_limits<unsigned>::max()) Fail(key, "too large");
      cfg.workers = static_cast<unsigned>(w);
    } else if (key == "out_dir") {
      cfg.out_dir = String(v, key);
    } else {
      Fail(key, "unknown key");
    }
  }
  if (validate) ValidateConfig(cfg);
  return cfg;
}

RunConfig LoadConfig(const std::string& path, bool validate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return ParseConfig(text.str(), validate);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string ToJson(const RunConfig& c) {
  json doc = json::object();
  if (c.figure) doc["figure"] = *c.figure;
  if (c.strategy) doc["strategy"] = *c.strategy;
  if (c.p) doc["p"] = *c.p;
  json zd = json::object();
  if (c.zd.p1) zd["p1"] = *c.zd.p1;
  if (c.zd.p4) zd["p4"] = *c.zd.p4;
  if (c.zd.s) zd["s"] = *c.zd.s;
  if (c.zd.phi) zd["phi"] = *c.zd.phi;
  if (c.zd.alpha) zd["alpha"] = *c.zd.alpha;
  if (c.zd.beta) zd["beta"] = *c.zd.beta;
  if (c.zd.gamma) zd["gamma"] = *c.zd.gamma;
  if (!zd.empty()) doc["zd"] = zd;
  if (c.rstp) {
    doc["rstp"] = {{"R", c.rstp->R}, {"S", c.rstp->S}, {"T", c.rstp->T},
                   {"P", c.rstp->P}};
  }
  if (c.rc) doc["rc"] = {{"r", c.rc->r}, {"c", c.rc->c}};
  doc["m"] = c.m;
  doc["n_opponents"] = c.n_opponents;
  doc["mode"] = c.mode;
  doc["rounds"] = c.rounds;
  doc["seed"] = c.seed;
  doc["workers"] = c.workers;
  if (c.out_dir) doc["out_dir"] = *c.out_dir;
  return doc.dump(2);
}

void ValidateConfig(const RunConfig& c) {
  const int sources = (c.figure ? 1 : 0) + (c.strategy ? 1 : 0) + (c.p ? 1 : 0);
  if (sources != 1) {
    throw ConfigError(
        "exactly one strategy source is required: figure, strategy or p");
  }
  if (c.rstp && c.rc) {
    throw ConfigError(
        "payoffs conflict: give either an rstp block or an rc block, not both");
  }
  if (!(c.m > 0.0 && c.m <= 1.0)) {
    throw ConfigError("config key 'm': m must be in (0,1]");
  }
  if (c.mode != "analytic" && c.mode != "simulated") {
    throw ConfigError("config key 'mode': expected analytic or simulated");
  }
  if (c.mode == "simulated" && c.rounds == 0) {
    throw ConfigError("config key 'rounds': simulated mode needs rounds >= 1");
  }
  if (c.n_opponents == 0) {
    throw ConfigError("config key 'n_opponents': must be at least 1");
  }
  if (c.figure && (*c.figure < 2 || *c.figure > 5)) {
    throw ConfigError("config key 'figure': expected 2, 3, 4 or 5");
  }
  if (c.strategy) {
    const std::string& s = *c.strategy;
    if (!IsZdKind(s) && !IsRegistryName(s)) {
      throw ConfigError("config key 'strategy': unknown strategy '" + s + "'");
    }
    if (s == "zd-set" && (!c.zd.p1 || !c.zd.p4)) {
      throw ConfigError("strategy zd-set needs zd.p1 and zd.p4");
    }
    if (s == "zd-extortion" && (!c.zd.s || !c.zd.phi)) {
      throw ConfigError("strategy zd-extortion needs zd.s and zd.phi");
    }
    if (s == "linear" &&
        (!c.zd.alpha || !c.zd.beta || !c.zd.gamma || !c.zd.phi)) {
      throw ConfigError(
          "strategy linear needs zd.alpha, zd.beta, zd.gamma and zd.phi");
    }
    if ((s == "zd-extortion" || s == "linear") && c.rstp) {
      throw ConfigError("strategy " + s +
                        " is defined for donation payoffs; use an rc block");
    }
  }
}

}  // namespace zdgame::cli
