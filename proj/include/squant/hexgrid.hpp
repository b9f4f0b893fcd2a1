#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "squant/errors.hpp"
#include "squant/geometry.hpp"

namespace squant {

struct CellIndex {
  int col = 0;
  int row = 0;

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

/// Flat-top hexagonal tiling of a rectangular region. Column pitch is
/// 1.5 * side, row pitch is sqrt(3) * side, odd columns are offset by half a
/// row pitch. Cell (0, 0) is centered at the origin.
class HexGrid {
public:
  HexGrid(double side_m, int cols, int rows, Point origin = {0.0, 0.0})
      : side_(side_m), cols_(cols), rows_(rows), origin_(origin) {
    if (!(side_m > 0.0)) throw ConfigError("hex grid: side must be positive");
    if (cols < 1 || rows < 1) throw ConfigError("hex grid: need at least one column and row");
  }

  double side() const { return side_; }
  int cols() const { return cols_; }
  int rows() const { return rows_; }
  Point origin() const { return origin_; }
  std::int64_t cell_count() const { return static_cast<std::int64_t>(cols_) * rows_; }

  double col_pitch() const { return 1.5 * side_; }
  double row_pitch() const { return kSqrt3 * side_; }

  /// Area of one hexagonal cell: (3*sqrt(3)/2) * side^2.
  double cell_area() const { return 1.5 * kSqrt3 * side_ * side_; }

  /// Width x height of the tiled region (cols * column pitch, rows * row pitch).
  Point extent() const { return {cols_ * col_pitch(), rows_ * row_pitch()}; }

  bool valid(CellIndex c) const {
    return c.col >= 0 && c.col < cols_ && c.row >= 0 && c.row < rows_;
  }

  /// Deterministic sample point of a cell: its centroid.
  Point center(CellIndex c) const {
    const double y_off = (c.col % 2 != 0) ? row_pitch() / 2.0 : 0.0;
    return {origin_.x + col_pitch() * c.col, origin_.y + row_pitch() * c.row + y_off};
  }

  CellIndex cell_at(std::int64_t flat) const {
    return {static_cast<int>(flat / rows_), static_cast<int>(flat % rows_)};
  }

  std::int64_t flat_index(CellIndex c) const {
    return static_cast<std::int64_t>(c.col) * rows_ + c.row;
  }

  /// Cell whose center is nearest to the point. Since the cells are the
  /// Voronoi regions of their centers, every point maps to exactly one cell
  /// (ties on the measure-zero boundary break toward the lower index).
  CellIndex locate(Point p) const {
    const double fc = (p.x - origin_.x) / col_pitch();
    const int c0 = static_cast<int>(std::floor(fc));
    CellIndex best{0, 0};
    double best_d2 = std::numeric_limits<double>::infinity();
    for (int c = c0 - 1; c <= c0 + 1; ++c) {
      const int cc = std::clamp(c, 0, cols_ - 1);
      const double y_off = (cc % 2 != 0) ? row_pitch() / 2.0 : 0.0;
      const int r0 = static_cast<int>(std::floor((p.y - origin_.y - y_off) / row_pitch() + 0.5));
      for (int r = r0 - 1; r <= r0 + 1; ++r) {
        const CellIndex cand{cc, std::clamp(r, 0, rows_ - 1)};
        const Point ctr = center(cand);
        const double dx = p.x - ctr.x, dy = p.y - ctr.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2 - 1e-12 ||
            (std::abs(d2 - best_d2) <= 1e-12 && flat_index(cand) < flat_index(best))) {
          best = cand;
          best_d2 = d2;
        }
      }
    }
    return best;
  }

  /// Grid whose tiling rectangle, centered half a pitch below/left of the
  /// first cell center, covers at least a width x height region.
  static HexGrid covering(double side_m, double width_m, double height_m, Point origin = {0, 0}) {
    if (!(side_m > 0.0) || !(width_m > 0.0) || !(height_m > 0.0))
      throw ConfigError("hex grid: side and extent must be positive");
    const int cols = std::max(1, static_cast<int>(std::ceil(width_m / (1.5 * side_m) + 0.5 - 1e-9)));
    const int rows =
        std::max(1, static_cast<int>(std::ceil(height_m / (kSqrt3 * side_m) + 0.5 - 1e-9)));
    return HexGrid(side_m, cols, rows, origin);
  }

private:
  static constexpr double kSqrt3 = 1.7320508075688772935274463415059;

  double side_;
  int cols_;
  int rows_;
  Point origin_;
};

inline HexGrid build_grid(double side_m, int cols, int rows, Point origin = {0.0, 0.0}) {
  return HexGrid(side_m, cols, rows, origin);
}

}  // namespace squant
