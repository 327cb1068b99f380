// Copyright 2026 The padiccf Authors
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

#pragma once

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace padiccf {

// A small SVG scatter/line chart. Styling is a legible default; the data
// placement is what matters.
class SvgChart {
 public:
  struct Series {
    std::string label;
    std::string color;
    bool connect = true;  // draw a polyline through the points
    std::vector<std::pair<double, double>> points;
  };

  SvgChart(std::string title, std::string xLabel, std::string yLabel)
      : title_(std::move(title)), xLabel_(std::move(xLabel)), yLabel_(std::move(yLabel)) {}

  void add_series(Series s) { series_.push_back(std::move(s)); }

  std::string render() const {
    const double w = 840, h = 560;
    const double left = 80, right = 30, top = 50, bottom = 60;
    const double plotW = w - left - right, plotH = h - top - bottom;

    double xMin = 0, xMax = 1, yMin = 0, yMax = 1;
    bool first = true;
    for (const auto& s : series_)
      for (const auto& [x, y] : s.points) {
        if (first) {
          xMin = xMax = x;
          yMin = yMax = y;
          first = false;
        }
        xMin = std::min(xMin, x);
        xMax = std::max(xMax, x);
        yMin = std::min(yMin, y);
        yMax = std::max(yMax, y);
      }
    if (xMax == xMin) xMax = xMin + 1;
    if (yMax == yMin) yMax = yMin + 1;
    const double xPad = 0.04 * (xMax - xMin), yPad = 0.06 * (yMax - yMin);
    xMin -= xPad;
    xMax += xPad;
    yMin -= yPad;
    yMax += yPad;

    auto px = [&](double x) { return left + (x - xMin) / (xMax - xMin) * plotW; };
    auto py = [&](double y) { return top + plotH - (y - yMin) / (yMax - yMin) * plotH; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << w / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"18\" "
           "font-family=\"sans-serif\">"
        << escape(title_) << "</text>\n";

    // axes box + ticks
    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plotW
        << "\" height=\"" << plotH << "\" fill=\"none\" stroke=\"#333\"/>\n";
    for (int i = 0; i <= 5; ++i) {
      const double fx = xMin + (xMax - xMin) * i / 5.0;
      const double fy = yMin + (yMax - yMin) * i / 5.0;
      out << "<line x1=\"" << px(fx) << "\" y1=\"" << top + plotH << "\" x2=\"" << px(fx)
          << "\" y2=\"" << top + plotH + 5 << "\" stroke=\"#333\"/>\n";
      out << "<text x=\"" << px(fx) << "\" y=\"" << top + plotH + 20
          << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">"
          << tick(fx) << "</text>\n";
      out << "<line x1=\"" << left - 5 << "\" y1=\"" << py(fy) << "\" x2=\"" << left
          << "\" y2=\"" << py(fy) << "\" stroke=\"#333\"/>\n";
      out << "<text x=\"" << left - 8 << "\" y=\"" << py(fy) + 4
          << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">"
          << tick(fy) << "</text>\n";
    }
    out << "<text x=\"" << left + plotW / 2 << "\" y=\"" << h - 14
        << "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\">"
        << escape(xLabel_) << "</text>\n";
    out << "<text x=\"20\" y=\"" << top + plotH / 2
        << "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\" "
           "transform=\"rotate(-90 20 "
        << top + plotH / 2 << ")\">" << escape(yLabel_) << "</text>\n";

    // series
    for (const auto& s : series_) {
      if (s.connect && s.points.size() > 1) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color
            << "\" stroke-width=\"1.6\" points=\"";
        for (const auto& [x, y] : s.points) out << px(x) << "," << py(y) << " ";
        out << "\"/>\n";
      }
      for (const auto& [x, y] : s.points)
        out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\""
            << s.color << "\"/>\n";
    }

    // legend
    double ly = top + 14;
    for (const auto& s : series_) {
      out << "<rect x=\"" << left + plotW - 170 << "\" y=\"" << ly - 9
          << "\" width=\"12\" height=\"12\" fill=\"" << s.color << "\"/>\n";
      out << "<text x=\"" << left + plotW - 152 << "\" y=\"" << ly + 2
          << "\" font-size=\"13\" font-family=\"sans-serif\">" << escape(s.label)
          << "</text>\n";
      ly += 20;
    }
    out << "</svg>\n";
    return out.str();
  }

 private:
  static std::string escape(const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '&')
        r += "&amp;";
      else if (c == '<')
        r += "&lt;";
      else if (c == '>')
        r += "&gt;";
      else
        r += c;
    }
    return r;
  }

  static std::string tick(double v) {
    std::ostringstream o;
    if (std::abs(v - std::round(v)) < 1e-9)
      o << static_cast<long long>(std::llround(v));
    else
      o << std::fixed << std::setprecision(1) << v;
    return o.str();
  }

  std::string title_, xLabel_, yLabel_;
  std::vector<Series> series_;
};

}  // namespace padiccf
