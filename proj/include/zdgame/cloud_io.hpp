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

#ifndef ZDGAME_CLOUD_IO_HPP_
#define ZDGAME_CLOUD_IO_HPP_

#include <iosfwd>
#include <span>
#include <string>

#include "zdgame/arena.hpp"

namespace zdgame {

inline constexpr const char* kCsvHeader =
    "index,q1,q2,q3,q4,sx,sy,degenerate,method";

// One row per point, doubles printed with 17 significant digits.
void WriteCloudCsv(const PayoffCloud& cloud, std::ostream& out);
void WriteCloudCsv(const PayoffCloud& cloud, const std::string& path);

struct SvgSeries {
  const PayoffCloud* cloud;
  std::string color;
};

// Scatter plot with s_X on the horizontal axis and s_Y on the vertical one.
void WriteCloudSvg(std::span<const SvgSeries> series, const std::string& title,
                   std::ostream& out);
void WriteCloudSvg(std::span<const SvgSeries> series, const std::string& title,
                   const std::string& path);

}  // namespace zdgame

#endif  // ZDGAME_CLOUD_IO_HPP_
