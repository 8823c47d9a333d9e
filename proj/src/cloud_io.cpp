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

#include "zdgame/cloud_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <tuple>

#include "zdgame/error.hpp"

namespace zdgame {
namespace {

std::ofstream OpenForWrite(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

void FinishWrite(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

// Axis span padded by 5% on each side; a zero span gets a unit window.
std::pair<double, double> Padded(double lo, double hi) {
  double span = hi - lo;
  if (!(span > 1e-12)) {
    return {lo - 0.5, hi + 0.5};
  }
  return {lo - 0.05 * span, hi + 0.05 * span};
}

std::string XmlEscape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

void WriteCloudCsv(const PayoffCloud& cloud, std::ostream& out) {
  out << kCsvHeader << '\n';
  char buf[512];
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const CloudPoint& p = cloud.points[i];
    std::snprintf(buf, sizeof(buf),
                  "%zu,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d,%s\n", i,
                  p.opponent[0], p.opponent[1], p.opponent[2], p.opponent[3],
                  p.sx, p.sy, p.degenerate ? 1 : 0, PayoffMethodName(p.method));
    out << buf;
  }
}

void WriteCloudCsv(const PayoffCloud& cloud, const std::string& path) {
  std::ofstream out = OpenForWrite(path);
  WriteCloudCsv(cloud, out);
  FinishWrite(out, path);
}

void WriteCloudSvg(std::span<const SvgSeries> series, const std::string& title,
                   std::ostream& out) {
  constexpr double kWidth = 640, kHeight = 480;
  constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 60;
  double x_lo = INFINITY, x_hi = -INFINITY, y_lo = INFINITY, y_hi = -INFINITY;
  for (const SvgSeries& s : series) {
    for (const CloudPoint& p : s.cloud->points) {
      x_lo = std::min(x_lo, p.sx);
      x_hi = std::max(x_hi, p.sx);
      y_lo = std::min(y_lo, p.sy);
      y_hi = std::max(y_hi, p.sy);
    }
  }
  if (!std::isfinite(x_lo)) x_lo = x_hi = y_lo = y_hi = 0.0;
  std::tie(x_lo, x_hi) = Padded(x_lo, x_hi);
  std::tie(y_lo, y_hi) = Padded(y_lo, y_hi);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
  auto py = [&](double y) {
    return kTop + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h;
  };

  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                kWidth, kHeight, kWidth, kHeight);
  out << buf;
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.1f\" y=\"24\" text-anchor=\"middle\" "
                "font-family=\"sans-serif\" font-size=\"15\">",
                kWidth / 2);
  out << buf << XmlEscape(title) << "</text>\n";

  // Frame and ticks.
  std::snprintf(buf, sizeof(buf),
                "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                "fill=\"none\" stroke=\"black\"/>\n",
                kLeft, kTop, plot_w, plot_h);
  out << buf;
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = x_lo + (x_hi - x_lo) * i / kTicks;
    const double yv = y_lo + (y_hi - y_lo) * i / kTicks;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                  "stroke=\"black\"/><text x=\"%.2f\" y=\"%.2f\" "
                  "text-anchor=\"middle\" font-family=\"sans-serif\" "
                  "font-size=\"11\">%.3g</text>\n",
                  px(xv), kTop + plot_h, px(xv), kTop + plot_h + 5, px(xv),
                  kTop + plot_h + 18, xv);
    out << buf;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
                  "stroke=\"black\"/><text x=\"%.2f\" y=\"%.2f\" "
                  "text-anchor=\"end\" font-family=\"sans-serif\" "
                  "font-size=\"11\">%.3g</text>\n",
                  kLeft - 5, py(yv), kLeft, py(yv), kLeft - 8, py(yv) + 4, yv);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\" "
                "font-family=\"sans-serif\" font-size=\"13\">s_X</text>\n",
                kLeft + plot_w / 2, kHeight - 15);
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "<text x=\"18\" y=\"%.1f\" text-anchor=\"middle\" "
                "font-family=\"sans-serif\" font-size=\"13\" "
                "transform=\"rotate(-90 18 %.1f)\">s_Y</text>\n",
                kTop + plot_h / 2, kTop + plot_h / 2);
  out << buf;

  for (const SvgSeries& s : series) {
    out << "<g fill=\"" << s.color << "\" fill-opacity=\"0.5\">\n";
    for (const CloudPoint& p : s.cloud->points) {
      std::snprintf(buf, sizeof(buf), "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"1\"/>\n",
                    px(p.sx), py(p.sy));
      out << buf;
    }
    out << "</g>\n";
  }
  // Legend.
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double y = kTop + 14 + 16 * static_cast<double>(i);
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"4\" fill=\"%s\"/>"
                  "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" "
                  "font-size=\"11\">",
                  kLeft + plot_w - 80, y, series[i].color.c_str(),
                  kLeft + plot_w - 70, y + 4);
    out << buf << XmlEscape(series[i].cloud->spec.label) << "</text>\n";
  }
  out << "</svg>\n";
}

void WriteCloudSvg(std::span<const SvgSeries> series, const std::string& title,
                   const std::string& path) {
  std::ofstream out = OpenForWrite(path);
  WriteCloudSvg(series, title, out);
  FinishWrite(out, path);
}

}  // namespace zdgame
