#include "squant/map_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "squant/errors.hpp"
#include "squant/summation.hpp"

namespace squant {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw IoError(s, "not a valid number");
  return v;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

void export_map(const ConsumptionMap& map, const std::string& path,
                const std::vector<double>& confidence) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot open for writing");
  const bool with_conf = !confidence.empty();
  out << "col,row,center_x_m,center_y_m,quantum,band,occupancy_w,opportunity_w,liability_w";
  if (with_conf) out << ",confidence";
  out << "\n";
  for (std::size_t i = 0; i < map.cells.size(); ++i) {
    const CellConsumption& c = map.cells[i];
    const Point ctr = map.grid.center(c.cell);
    out << c.cell.col << ',' << c.cell.row << ',' << format_double(ctr.x) << ','
        << format_double(ctr.y) << ',' << c.quantum << ',' << c.band << ','
        << format_double(c.occupancy_w) << ',' << format_double(c.opportunity_w) << ','
        << format_double(c.liability_w);
    if (with_conf) out << ',' << format_double(confidence[i]);
    out << '\n';
  }
  if (!out) throw IoError(path, "write failed");
}

ConsumptionMap import_map(const std::string& path, double side_m, const SpectrumFrame& frame,
                          const PowerBounds& bounds) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for reading");
  std::string line;
  if (!std::getline(in, line)) throw IoError(path, "empty file");

  std::vector<CellConsumption> cells;
  int max_col = 0, max_row = 0;
  Point origin{0.0, 0.0};
  bool have_origin = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() < 9) throw IoError(path, "short row: " + line);
    CellConsumption c;
    c.cell.col = std::stoi(f[0]);
    c.cell.row = std::stoi(f[1]);
    c.quantum = std::stoi(f[4]);
    c.band = std::stoi(f[5]);
    c.occupancy_w = parse_double(f[6]);
    c.opportunity_w = parse_double(f[7]);
    c.liability_w = parse_double(f[8]);
    if (c.cell.col == 0 && c.cell.row == 0 && !have_origin) {
      origin = {parse_double(f[2]), parse_double(f[3])};
      have_origin = true;
    }
    max_col = std::max(max_col, c.cell.col);
    max_row = std::max(max_row, c.cell.row);
    cells.push_back(c);
  }

  ConsumptionMap map{HexGrid(side_m, max_col + 1, max_row + 1, origin), frame, std::move(cells), {}};
  KahanSum ut, fb, av;
  for (const auto& c : map.cells) {
    ut.add(c.occupancy_w);
    av.add(c.opportunity_w);
    fb.add(c.liability_w);
  }
  map.totals = {total_space(map.grid, frame, bounds), ut.value(), fb.value(), av.value()};
  return map;
}

void export_totals(const ConsumptionMap& map, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot open for writing");
  const double area = map.grid.cell_area();
  out << "quantity,w_cell,w_m2,pct_of_total\n";
  auto row = [&](const char* name, double v) {
    out << name << ',' << format_double(v) << ',' << format_double(v * area) << ','
        << format_double(100.0 * v / map.totals.total) << '\n';
  };
  row("total", map.totals.total);
  row("utilized", map.totals.utilized);
  row("forbidden", map.totals.forbidden);
  row("available", map.totals.available);
  if (!out) throw IoError(path, "write failed");
}

}  // namespace squant
