#pragma once

#include <array>
#include <cmath>

namespace hjlab {

/// Point/vector in R^D with D in {1,2}. Unused trailing components are kept
/// at zero so dot/norm can run over both entries unconditionally.
using Vec = std::array<double, 2>;

inline Vec vec1(double x) { return {x, 0.0}; }
inline Vec vec2(double x, double y) { return {x, y}; }

inline double dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1]; }
inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec operator+(const Vec& a, const Vec& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec operator-(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec operator*(double s, const Vec& a) { return {s * a[0], s * a[1]}; }
inline Vec operator-(const Vec& a) { return {-a[0], -a[1]}; }

/// Symmetric 2x2 matrix (only the upper triangle is stored). In 1D only xx
/// is meaningful.
struct SymMat {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  /// Spectral norm (largest eigenvalue magnitude).
  double opnorm(int dim) const {
    if (dim == 1) return std::abs(xx);
    const double tr = xx + yy;
    const double det = xx * yy - xy * xy;
    const double disc = std::sqrt(std::max(0.25 * tr * tr - det, 0.0));
    return std::max(std::abs(0.5 * tr + disc), std::abs(0.5 * tr - disc));
  }
};

}  // namespace hjlab
