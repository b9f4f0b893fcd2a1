#pragma once

#include <cmath>

namespace squant {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Angle of the vector a -> b, in radians, in (-pi, pi].
inline double bearing(Point a, Point b) { return std::atan2(b.y - a.y, b.x - a.x); }

/// Wrap an angle difference into [-pi, pi).
inline double wrap_angle(double rad) {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  double r = std::fmod(rad + 3.1415926535897932384626433832795, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r - 3.1415926535897932384626433832795;
}

}  // namespace squant
