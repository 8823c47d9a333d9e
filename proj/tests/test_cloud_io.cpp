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


#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "zdgame/arena.hpp"
#include "zdgame/classic_strategies.hpp"
#include "zdgame/cloud_io.hpp"

using namespace zdgame;

namespace {

std::vector<std::string> Split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("CSV round-trips the cloud exactly") {
  ExperimentSpec spec;
  spec.x_strategy = MemoryOneStrategy(0.9, 0.3, 0.5, 0.0);
  spec.n_opponents = 300;
  spec.master_seed = 9;
  const PayoffCloud c = RunCloud(spec);
  std::ostringstream out;
  WriteCloudCsv(c, out);

  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == kCsvHeader);
  std::size_t row = 0;
  while (std::getline(in, line)) {
    const auto cells = Split(line);
    REQUIRE(cells.size() == 9);
    REQUIRE(row < c.points.size());
    const CloudPoint& p = c.points[row];
    CHECK(std::stoull(cells[0]) == row);
    for (int j = 0; j < 4; ++j) CHECK(std::strtod(cells[1 + j].c_str(), nullptr) == p.opponent[j]);
    CHECK(std::strtod(cells[5].c_str(), nullptr) == p.sx);
    CHECK(std::strtod(cells[6].c_str(), nullptr) == p.sy);
    CHECK(cells[7] == (p.degenerate ? "1" : "0"));
    CHECK(cells[8] == PayoffMethodName(p.method));
    ++row;
  }
  CHECK(row == c.points.size());
}

TEST_CASE("degenerate points are flagged in the CSV") {
  // Random opponents are almost never degenerate; use a hand-made cloud.
  PayoffCloud c;
  c.points.push_back({1.5, 1.5, Tft().strategy, true, PayoffMethod::kTimeAverage});
  c.points.push_back({0.5, 0.25, Wsls().strategy, false, PayoffMethod::kDeterminant});
  std::ostringstream out;
  WriteCloudCsv(c, out);
  const std::string s = out.str();
  CHECK(s.find("0,1,0,1,0,1.5,1.5,1,time_average") != std::string::npos);
  CHECK(s.find("1,1,0,0,1,0.5,0.25,0,determinant") != std::string::npos);
}

TEST_CASE("SVG scatter") {
  ExperimentSpec spec;
  spec.x_strategy = Wsls().strategy;
  spec.n_opponents = 40;
  spec.label = "wsls";
  const PayoffCloud c = RunCloud(spec);
  const SvgSeries series[] = {{&c, "#1f77b4"}};
  std::ostringstream out;
  WriteCloudSvg(series, "test <&> title", out);
  const std::string s = out.str();
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("</svg>") != std::string::npos);
  std::size_t circles = 0;
  for (std::size_t pos = s.find("<circle"); pos != std::string::npos;
       pos = s.find("<circle", pos + 1)) {
    ++circles;
  }
  CHECK(circles >= 40);
  CHECK(s.find("&lt;&amp;&gt;") != std::string::npos);
  CHECK(s.find("s_X") != std::string::npos);
}
