#pragma once

// Two-column "x y" text series for external plotting tools.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace hyperstate {

struct PlotSeries {
  std::string name;  // also the file stem
  std::string x_label = "d";
  std::string y_label;
  std::vector<std::pair<int, double>> points;
};

inline std::string format_plot_data(const PlotSeries& s) {
  std::string out = "# " + s.name + "\n# " + s.x_label + ' ' + s.y_label + '\n';
  char buf[64];
  for (const auto& [x, y] : s.points) {
    std::snprintf(buf, sizeof buf, "%d %.17g\n", x, y);
    out += buf;
  }
  return out;
}

inline void emit_plot_data(const PlotSeries& s, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + file.string() + "' for writing");
  out << format_plot_data(s);
  if (!out) throw std::runtime_error("write to '" + file.string() + "' failed");
}

/// One <name>.dat file per series inside dir; returns the paths written.
inline std::vector<std::filesystem::path> emit_plot_data(const std::vector<PlotSeries>& series,
                                                         const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& s : series) {
    written.push_back(dir / (s.name + ".dat"));
    emit_plot_data(s, written.back());
  }
  return written;
}

}  // namespace hyperstate
