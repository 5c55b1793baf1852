#pragma once

#include <cmath>
#include <limits>

namespace symell::fp {

/// Distance from |v| to the next representable double away from zero.
inline double ulp(double v) {
  const double a = std::fabs(v);
  if (!std::isfinite(a)) return a;
  return std::nextafter(a, std::numeric_limits<double>::infinity()) - a;
}

inline double widen_down(double v, int ulps) { return v - ulps * ulp(v); }
inline double widen_up(double v, int ulps) { return v + ulps * ulp(v); }

/// a <= b, or a exceeds b by no more than `ulps` ulps of the larger magnitude.
inline bool le_band(double a, double b, int ulps) {
  if (a <= b) return true;
  const double m = std::fmax(std::fabs(a), std::fabs(b));
  return a - b <= ulps * ulp(m);
}

/// |a - b| within `ulps` ulps of the larger magnitude.
inline bool within_band(double a, double b, int ulps) {
  return le_band(a, b, ulps) && le_band(b, a, ulps);
}

inline double rel_diff(double a, double b) {
  const double s = std::fmax(std::fabs(a), std::fabs(b));
  return s == 0 ? 0.0 : std::fabs(a - b) / s;
}

}  // namespace symell::fp
