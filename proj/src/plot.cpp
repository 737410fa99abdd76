#include <algorithm>
#include <array>
#include <charconv>
#include <map>

#include "nested/io.hpp"

namespace nested {
namespace {

constexpr double kWidth = 640, kHeight = 400;
constexpr double kLeft = 60, kRight = 110, kTop = 20, kBottom = 50;
constexpr double kPlotW = kWidth - kLeft - kRight, kPlotH = kHeight - kTop - kBottom;

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                              "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string fixed(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, ptr);
}

}  // namespace

std::string render_strength_plot(const Trace& trace) {
  if (trace.rows.empty()) throw Error(ErrorKind::EmptyTrace, "cannot plot an empty trace");

  std::map<std::size_t, Eigen::Index> column;
  std::size_t levels = 0;
  for (const TraceRow& row : trace.rows) {
    column.emplace(row.step, 0);
    levels = std::max(levels, row.level);
  }
  Eigen::Index next = 0;
  std::vector<std::size_t> steps;
  for (auto& [step, col] : column) {
    col = next++;
    steps.push_back(step);
  }

  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(levels), next);
  Eigen::MatrixXd count = sum;
  for (const TraceRow& row : trace.rows) {
    const auto r = static_cast<Eigen::Index>(row.level - 1);
    sum(r, column[row.step]) += row.value;
    count(r, column[row.step]) += 1;
  }
  const Eigen::MatrixXd mean = sum.cwiseQuotient(count.cwiseMax(1.0));

  const double vmax = mean.maxCoeff() > 0 ? mean.maxCoeff() : 1.0;
  const double s0 = static_cast<double>(steps.front());
  const double s1 = static_cast<double>(steps.back());
  auto x_of = [&](double s) {
    return steps.size() == 1 ? kLeft + kPlotW / 2 : kLeft + (s - s0) / (s1 - s0) * kPlotW;
  };
  auto y_of = [&](double v) { return kTop + kPlotH - v / vmax * kPlotH; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
         "viewBox=\"0 0 640 400\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  const std::string base = fixed(kTop + kPlotH);
  svg += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + base + "\" x2=\"" + fixed(kLeft + kPlotW) +
         "\" y2=\"" + base + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop) + "\" x2=\"" + fixed(kLeft) +
         "\" y2=\"" + base + "\" stroke=\"black\"/>\n";

  const std::size_t stride = std::max<std::size_t>(1, (steps.size() + 9) / 10);
  for (std::size_t i = 0; i < steps.size(); i += stride) {
    const std::string x = fixed(x_of(static_cast<double>(steps[i])));
    svg += "<text x=\"" + x + "\" y=\"" + fixed(kTop + kPlotH + 16) +
           "\" text-anchor=\"middle\">" + std::to_string(steps[i]) + "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double v = vmax * i / 4;
    svg += "<text x=\"" + fixed(kLeft - 6) + "\" y=\"" + fixed(y_of(v) + 4) +
           "\" text-anchor=\"end\">" + format_value(v) + "</text>\n";
  }
  svg += "<text x=\"" + fixed(kLeft + kPlotW / 2) + "\" y=\"" + fixed(kHeight - 12) +
         "\" text-anchor=\"middle\">step</text>\n";
  svg += "<text x=\"16\" y=\"" + fixed(kTop + kPlotH / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " + fixed(kTop + kPlotH / 2) +
         ")\">mean level value</text>\n";

  for (std::size_t level = 1; level <= levels; ++level) {
    const auto r = static_cast<Eigen::Index>(level - 1);
    const std::string color = kPalette[(level - 1) % kPalette.size()];
    const std::string tag = "data-level=\"" + std::to_string(level) + "\"";
    if (steps.size() == 1) {
      svg += "<circle " + tag + " cx=\"" + fixed(x_of(s0)) + "\" cy=\"" + fixed(y_of(mean(r, 0))) +
             "\" r=\"3\" fill=\"" + color + "\"/>\n";
    } else {
      svg += "<polyline " + tag + " fill=\"none\" stroke=\"" + color + "\" points=\"";
      for (Eigen::Index c = 0; c < next; ++c) {
        if (c > 0) svg += ' ';
        svg += fixed(x_of(static_cast<double>(steps[static_cast<std::size_t>(c)]))) + "," +
               fixed(y_of(mean(r, c)));
      }
      svg += "\"/>\n";
    }
    const double ly = kTop + 12 + 16 * static_cast<double>(level - 1);
    svg += "<text x=\"" + fixed(kWidth - kRight + 12) + "\" y=\"" + fixed(ly) + "\" fill=\"" +
           color + "\">level " + std::to_string(level) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace nested
