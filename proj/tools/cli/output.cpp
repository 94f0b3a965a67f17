#include "cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "mmslab/errors.hpp"

namespace mmscli {

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

namespace {

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw mms::ValidationError("cannot write " + p.string());
  f << text;
}

}  // namespace

std::string svg_plot(const std::vector<Curve>& curves, const std::string& title, const std::string& xlabel,
                     const std::string& ylabel) {
  const double W = 640, H = 400, L = 60, R = 20, T = 40, B = 50;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& c : curves)
    for (std::size_t i = 0; i < c.x.size() && i < c.y.size(); ++i) {
      if (!std::isfinite(c.x[i]) || !std::isfinite(c.y[i])) continue;
      x0 = std::min(x0, c.x[i]);
      x1 = std::max(x1, c.x[i]);
      y0 = std::min(y0, c.y[i]);
      y1 = std::max(y1, c.y[i]);
    }
  if (!(x1 >= x0)) x0 = 0, x1 = 1;
  if (!(y1 >= y0)) y0 = 0, y1 = 1;
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y0 -= 0.5, y1 += 0.5;
  auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n"
    << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n"
    << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n"
    << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"12\">" << xlabel << "</text>\n"
    << "<text x=\"14\" y=\"" << H / 2 << "\" font-size=\"12\" transform=\"rotate(-90 14 " << H / 2 << ")\">" << ylabel
    << "</text>\n";
  for (double v : {x0, x1})
    s << "<text x=\"" << px(v) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\" font-size=\"10\">" << fmt(v) << "</text>\n";
  for (double v : {y0, y1})
    s << "<text x=\"" << L - 4 << "\" y=\"" << py(v) << "\" text-anchor=\"end\" font-size=\"10\">" << fmt(v) << "</text>\n";
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const auto& c = curves[k];
    const char* col = colors[k % 6];
    s << "<polyline fill=\"none\" stroke=\"" << col << "\" points=\"";
    for (std::size_t i = 0; i < c.x.size() && i < c.y.size(); ++i)
      if (std::isfinite(c.x[i]) && std::isfinite(c.y[i])) s << px(c.x[i]) << "," << py(c.y[i]) << " ";
    s << "\"/>\n";
    s << "<text x=\"" << W - R - 4 << "\" y=\"" << T + 14 * (k + 1) << "\" text-anchor=\"end\" font-size=\"11\" fill=\""
      << col << "\">" << c.label << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

void write_outputs(const std::filesystem::path& dir, const nlohmann::json& report, const Series& series,
                   const nlohmann::json& meta, const std::vector<Curve>& curves, bool svg, const std::string& title) {
  std::filesystem::create_directories(dir);
  write_file(dir / "report.json", report.dump(2) + "\n");
  std::ostringstream csv;
  for (std::size_t i = 0; i < series.columns.size(); ++i) csv << (i ? "," : "") << series.columns[i];
  csv << "\n";
  for (const auto& r : series.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) csv << (i ? "," : "") << r[i];
    csv << "\n";
  }
  write_file(dir / "series.csv", csv.str());
  write_file(dir / "meta.json", meta.dump(2) + "\n");
  if (svg && !curves.empty())
    write_file(dir / "plot.svg",
               svg_plot(curves, title, series.columns.empty() ? "x" : series.columns.front(), "value"));
}

}  // namespace mmscli
