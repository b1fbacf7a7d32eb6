#pragma once

#include <functional>
#include <vector>

#include "hjlab/vec.hpp"

namespace hjlab {

/// Uniform periodic grid over a torus cell, nodes x_i = i*h per axis.
struct Grid {
  int dim = 1;
  std::array<double, 2> cell{};
  std::array<int, 2> n{};

  double h(int axis) const { return cell[axis] / n[axis]; }
  double hmin() const { return dim == 1 ? h(0) : std::min(h(0), h(1)); }
  std::size_t size() const { return dim == 1 ? n[0] : std::size_t(n[0]) * n[1]; }
  Vec node(int i, int j = 0) const { return {i * h(0), dim == 2 ? j * h(1) : 0.0}; }

  bool operator==(const Grid& o) const {
    return dim == o.dim && cell == o.cell && n == o.n;
  }
};

Grid make_grid(int dim, double cell, int n);
Grid make_grid2(double cell_x, int nx, double cell_y, int ny);

/// Sampled scalar field on a Grid (row-major in 2D). Values are finite by
/// construction.
struct Field {
  Grid grid;
  std::vector<double> v;

  double& at(int i, int j = 0) { return v[grid.dim == 1 ? i : std::size_t(i) * grid.n[1] + j]; }
  double at(int i, int j = 0) const {
    return v[grid.dim == 1 ? i : std::size_t(i) * grid.n[1] + j];
  }
  /// Periodic read with arbitrary integer offsets.
  double wrap(int i, int j = 0) const;
};

/// Time-indexed stack of Fields on a shared grid; t_0 = 0 and the step is
/// uniform to 1e-12 relative.
struct SpaceTimeField {
  Grid grid;
  std::vector<double> times;
  std::vector<Field> slices;

  double dt() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
  double horizon() const { return times.empty() ? 0.0 : times.back(); }
  void validate() const;
};

/// Offset direction for second differences: axes plus (in 2D) the two
/// diagonals.
struct Direction {
  int di = 0;
  int dj = 0;
};
std::vector<Direction> difference_directions(const Grid& grid);

Field sample(const Grid& grid, const std::function<double(const Vec&)>& rule);

/// Centered periodic differences per axis, (f_{i+1} - f_{i-1}) / (2h).
std::vector<Field> gradient_fd(const Field& f);

/// (f(x+he) + f(x-he) - 2 f(x)) / |he|^2 with periodic wrap; the grid-scale
/// probe of the semi-concavity defect along e.
Field second_difference_quotients(const Field& f, const Direction& e);

double sup_norm(const Field& f);

/// Max one-sided difference quotient over the axes.
double lipschitz_estimate(const Field& f);

/// Centered time derivative at interior index k.
Field time_derivative_fd(const SpaceTimeField& f, int k);

/// Linear (1D) / bilinear (2D) periodic interpolation at an arbitrary point.
double interp(const Field& f, const Vec& x);

/// Signed per-axis displacement folded into [-cell/2, cell/2).
double periodic_delta(double a, double b, double cell);
/// Periodic Euclidean distance on the torus.
double periodic_distance(const Vec& a, const Vec& b, const Grid& grid);

}  // namespace hjlab
