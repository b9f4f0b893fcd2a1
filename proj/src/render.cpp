#include "squant/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "squant/errors.hpp"

namespace squant {

namespace {

double field_of(const CellConsumption& c, MapField f) {
  switch (f) {
    case MapField::occupancy: return c.occupancy_w;
    case MapField::opportunity: return c.opportunity_w;
    case MapField::liability: return c.liability_w;
  }
  return 0.0;
}

// Log-compressed magnitude mapped onto a blue -> yellow ramp.
std::string color_for(double v, double lo, double hi) {
  double t = hi > lo ? (v - lo) / (hi - lo) : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const int r = static_cast<int>(255 * t);
  const int g = static_cast<int>(64 + 160 * t);
  const int b = static_cast<int>(255 * (1.0 - t));
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return buf;
}

double compress(double v) {
  const double a = std::abs(v);
  const double mag = a < 1e-23 ? 0.0 : std::log10(a / 1e-23);
  return v < 0.0 ? -mag : mag;
}

}  // namespace

void render_svg(const ConsumptionMap& map, MapField field, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot open for writing");

  const HexGrid& g = map.grid;
  const double s = g.side();
  const double scale = 800.0 / std::max(g.extent().x, g.extent().y);

  double lo = 1e300, hi = -1e300;
  const std::int64_t n = g.cell_count();
  for (std::int64_t i = 0; i < n; ++i) {
    const double v = compress(field_of(map.cells[i], field));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  const double w = (g.extent().x + 2 * s) * scale;
  const double h = (g.extent().y + 2 * s) * scale;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  for (std::int64_t i = 0; i < n; ++i) {
    const CellConsumption& c = map.cells[i];
    const Point ctr = g.center(c.cell);
    out << "<polygon points=\"";
    for (int k = 0; k < 6; ++k) {
      const double ang = k * 1.0471975511965976;
      const double x = (ctr.x - g.origin().x + s + s * std::cos(ang)) * scale;
      const double y = h - (ctr.y - g.origin().y + s + s * std::sin(ang)) * scale;
      out << x << ',' << y << (k < 5 ? " " : "");
    }
    out << "\" fill=\"" << color_for(compress(field_of(c, field)), lo, hi)
        << "\" stroke=\"none\"/>\n";
  }
  out << "</svg>\n";
  if (!out) throw IoError(path, "write failed");
}

}  // namespace squant
