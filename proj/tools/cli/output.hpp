#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mmscli {

struct Series {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

std::string fmt(double v);

struct Curve {
  std::string label;
  std::vector<double> x, y;
};

/// Writes report.json (deterministic), series.csv, meta.json (timestamps,
/// command line, elapsed seconds) and, when curves are given and svg is set,
/// plot.svg.
void write_outputs(const std::filesystem::path& dir, const nlohmann::json& report, const Series& series,
                   const nlohmann::json& meta, const std::vector<Curve>& curves, bool svg,
                   const std::string& title);

/// Minimal line plot with one polyline per curve; non-finite points are skipped.
std::string svg_plot(const std::vector<Curve>& curves, const std::string& title, const std::string& xlabel,
                     const std::string& ylabel);

}  // namespace mmscli
