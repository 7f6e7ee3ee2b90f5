#include "tifl/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "tifl/error.hpp"

namespace tifl {

std::string format_number(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  if (v == 0.0) v = 0.0;  // folds -0 into 0
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

namespace {

void write_row(std::ostream& os, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) os << ',';
    os << format_number(v);
    first = false;
  }
  os << '\n';
}

}  // namespace

void write_fields_csv(std::ostream& os, const PlaneGrid<PairFields>& fields, bool left) {
  os << "x,y,z,V,Ex,Ey,Ez\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (!fields.mask[i]) continue;
    const FieldSample& s = left ? fields.values[i].left : fields.values[i].right;
    write_row(os, {s.point.x, s.point.y, s.point.z, s.potential, s.field.x, s.field.y, s.field.z});
  }
}

void write_envelope_csv(std::ostream& os, const PlaneGrid<double>& map) {
  os << "x,y,z,am_max\n";
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (!map.mask[i]) continue;
    const Point3 p = map.point(i);
    write_row(os, {p.x, p.y, p.z, map.values[i]});
  }
}

void write_pgm(std::ostream& os, const PlaneGrid<double>& map) {
  const int n = map.n();
  double peak = 0.0;
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map.mask[i]) peak = std::max(peak, map.values[i]);
  os << "P5\n" << n << ' ' << n << "\n255\n";
  std::string row(static_cast<std::size_t>(n), '\0');
  for (int r = n - 1; r >= 0; --r) {
    for (int c = 0; c < n; ++c) {
      const std::size_t i = static_cast<std::size_t>(r) * n + c;
      double level = 0.0;
      if (map.mask[i] && peak > 0.0) level = std::clamp(map.values[i] / peak, 0.0, 1.0);
      row[c] = static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * level)));
    }
    os.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

void write_scenario_csv(std::ostream& os, const ScenarioResult& result, Plane plane) {
  os << "param,argmax_x,argmax_y,argmax_z,peak,extent,region,depth\n";
  for (const auto& pt : result.points) {
    const FocalSummary& f = plane == Plane::XY ? pt.focal_xy : pt.focal_xz;
    os << format_number(pt.value) << ',' << format_number(f.argmax_point.x) << ','
       << format_number(f.argmax_point.y) << ',' << format_number(f.argmax_point.z) << ','
       << format_number(f.peak_value) << ',' << format_number(f.focal_extent) << ',' << f.region.name() << ','
       << to_string(f.depth) << '\n';
  }
}

namespace {

std::string range_text(double lo, double hi) {
  if (lo == hi) return format_number(lo);
  return format_number(lo) + "-" + format_number(hi);
}

void write_table(std::ostream& os, const std::string& title, const std::vector<GuidelineEntry>& entries) {
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"target", "ratio", "phi (deg)", "alpha (deg)", "cells"});
  for (const auto& e : entries) {
    if (e.rules.empty()) {
      rows.push_back({e.label(), "-", "-", "-", "0"});
      continue;
    }
    for (const auto& r : e.rules)
      rows.push_back({e.label(), to_string(r.regime), range_text(r.phi_min, r.phi_max),
                      range_text(r.alpha_min, r.alpha_max), std::to_string(r.cells)});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  os << title << '\n';
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t c = 0; c < rows[k].size(); ++c) {
      os << rows[k][c];
      if (c + 1 < rows[k].size()) os << std::string(width[c] - rows[k][c].size() + 2, ' ');
    }
    os << '\n';
    if (k == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      os << std::string(total - 2, '-') << '\n';
    }
  }
}

}  // namespace

void write_guideline_tables(std::ostream& os, const GuidelineReport& report) {
  write_table(os, "Focus position in the xy plane", report.regions);
  os << '\n';
  write_table(os, "Focus depth in the xz plane", report.depths);
  os << "\nambiguous cells: " << report.ambiguous_cells << " of " << report.cells.size() << '\n';
}

void write_volume_csv(std::ostream& os, const GridSolution& solution) {
  os << "x,y,z,V,Ex,Ey,Ez\n";
  const int n = solution.n();
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        if (!solution.inside(i, j, k)) continue;
        const Point3 p = solution.cell_center(i, j, k);
        const Vec3 e = solution.field(i, j, k);
        write_row(os, {p.x, p.y, p.z, solution.potential(i, j, k), e.x, e.y, e.z});
      }
}

}  // namespace tifl
