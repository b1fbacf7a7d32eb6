#include "hjlab/grid_field.hpp"

#include <cmath>
#include <string>

#include "hjlab/error.hpp"
#include "hjlab/parallel.hpp"

namespace hjlab {

namespace {

int wrap_index(int i, int n) {
  int r = i % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Grid make_grid(int dim, double cell, int n) {
  if (dim != 1 && dim != 2) throw Error(ErrorCode::BadSpec, "dimension must be 1 or 2");
  if (!(cell > 0.0)) throw Error(ErrorCode::BadSpec, "cell length must be positive");
  if (n < 8) throw Error(ErrorCode::BadSpec, "need at least 8 points per axis");
  Grid g;
  g.dim = dim;
  g.cell = {cell, dim == 2 ? cell : 0.0};
  g.n = {n, dim == 2 ? n : 0};
  return g;
}

Grid make_grid2(double cell_x, int nx, double cell_y, int ny) {
  if (!(cell_x > 0.0) || !(cell_y > 0.0))
    throw Error(ErrorCode::BadSpec, "cell length must be positive");
  if (nx < 8 || ny < 8) throw Error(ErrorCode::BadSpec, "need at least 8 points per axis");
  Grid g;
  g.dim = 2;
  g.cell = {cell_x, cell_y};
  g.n = {nx, ny};
  return g;
}

double Field::wrap(int i, int j) const {
  const int wi = wrap_index(i, grid.n[0]);
  if (grid.dim == 1) return v[wi];
  return v[std::size_t(wi) * grid.n[1] + wrap_index(j, grid.n[1])];
}

void SpaceTimeField::validate() const {
  if (times.size() != slices.size())
    throw Error(ErrorCode::GridMismatch, "slice count must equal time count");
  if (times.empty() || times[0] != 0.0)
    throw Error(ErrorCode::BadSpec, "time lattice must start at 0");
  if (times.size() > 1) {
    const double step = times[1] - times[0];
    for (std::size_t k = 1; k < times.size(); ++k) {
      const double d = times[k] - times[k - 1];
      if (!(d > 0.0) || std::abs(d - step) > 1e-12 * std::max(1.0, std::abs(step)))
        throw Error(ErrorCode::BadSpec, "time lattice must be uniform and increasing");
    }
  }
  for (const auto& s : slices)
    if (!(s.grid == grid)) throw Error(ErrorCode::GridMismatch, "slice grid differs");
}

std::vector<Direction> difference_directions(const Grid& grid) {
  if (grid.dim == 1) return {{1, 0}};
  return {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
}

Field sample(const Grid& grid, const std::function<double(const Vec&)>& rule) {
  Field f;
  f.grid = grid;
  f.v.resize(grid.size());
  const int n0 = grid.n[0];
  const int n1 = grid.dim == 2 ? grid.n[1] : 1;
  for (int i = 0; i < n0; ++i) {
    for (int j = 0; j < n1; ++j) {
      const double val = rule(grid.node(i, j));
      if (!std::isfinite(val))
        throw Error(ErrorCode::NonFinite,
                    "sample at node (" + std::to_string(i) + "," + std::to_string(j) + ")");
      f.v[grid.dim == 1 ? i : std::size_t(i) * n1 + j] = val;
    }
  }
  return f;
}

std::vector<Field> gradient_fd(const Field& f) {
  const Grid& g = f.grid;
  std::vector<Field> out(g.dim);
  for (int d = 0; d < g.dim; ++d) {
    out[d].grid = g;
    out[d].v.resize(g.size());
  }
  const int n0 = g.n[0];
  const int n1 = g.dim == 2 ? g.n[1] : 1;
  parallel_for(n0, [&](std::int64_t lo, std::int64_t hi) {
    for (int i = int(lo); i < int(hi); ++i) {
      for (int j = 0; j < n1; ++j) {
        out[0].at(i, j) = (f.wrap(i + 1, j) - f.wrap(i - 1, j)) / (2.0 * g.h(0));
        if (g.dim == 2)
          out[1].at(i, j) = (f.wrap(i, j + 1) - f.wrap(i, j - 1)) / (2.0 * g.h(1));
      }
    }
  });
  return out;
}

Field second_difference_quotients(const Field& f, const Direction& e) {
  const Grid& g = f.grid;
  Field q;
  q.grid = g;
  q.v.resize(g.size());
  const double sx = e.di * g.h(0);
  const double sy = g.dim == 2 ? e.dj * g.h(1) : 0.0;
  const double denom = sx * sx + sy * sy;
  const int n1 = g.dim == 2 ? g.n[1] : 1;
  parallel_for(g.n[0], [&](std::int64_t lo, std::int64_t hi) {
    for (int i = int(lo); i < int(hi); ++i)
      for (int j = 0; j < n1; ++j)
        q.at(i, j) =
            (f.wrap(i + e.di, j + e.dj) + f.wrap(i - e.di, j - e.dj) - 2.0 * f.at(i, j)) / denom;
  });
  return q;
}

double sup_norm(const Field& f) {
  double m = 0.0;
  for (double x : f.v) m = std::max(m, std::abs(x));
  return m;
}

double lipschitz_estimate(const Field& f) {
  const Grid& g = f.grid;
  const int n1 = g.dim == 2 ? g.n[1] : 1;
  double m = 0.0;
  for (int i = 0; i < g.n[0]; ++i) {
    for (int j = 0; j < n1; ++j) {
      m = std::max(m, std::abs(f.wrap(i + 1, j) - f.at(i, j)) / g.h(0));
      if (g.dim == 2) m = std::max(m, std::abs(f.wrap(i, j + 1) - f.at(i, j)) / g.h(1));
    }
  }
  return m;
}

Field time_derivative_fd(const SpaceTimeField& f, int k) {
  const int last = static_cast<int>(f.times.size()) - 1;
  if (k < 1 || k > last - 1)
    throw Error(ErrorCode::IndexOutOfRange,
                "time index " + std::to_string(k) + " not interior");
  Field out;
  out.grid = f.grid;
  out.v.resize(f.grid.size());
  const double inv = 1.0 / (2.0 * f.dt());
  for (std::size_t m = 0; m < out.v.size(); ++m)
    out.v[m] = (f.slices[k + 1].v[m] - f.slices[k - 1].v[m]) * inv;
  return out;
}

double interp(const Field& f, const Vec& x) {
  const Grid& g = f.grid;
  const double s0 = x[0] / g.h(0);
  const int i0 = static_cast<int>(std::floor(s0));
  const double t0 = s0 - std::floor(s0);
  if (g.dim == 1) return (1.0 - t0) * f.wrap(i0) + t0 * f.wrap(i0 + 1);
  const double s1 = x[1] / g.h(1);
  const int j0 = static_cast<int>(std::floor(s1));
  const double t1 = s1 - std::floor(s1);
  return (1.0 - t0) * ((1.0 - t1) * f.wrap(i0, j0) + t1 * f.wrap(i0, j0 + 1)) +
         t0 * ((1.0 - t1) * f.wrap(i0 + 1, j0) + t1 * f.wrap(i0 + 1, j0 + 1));
}

double periodic_delta(double a, double b, double cell) {
  double d = std::fmod(a - b, cell);
  if (d < -0.5 * cell) d += cell;
  if (d >= 0.5 * cell) d -= cell;
  return d;
}

double periodic_distance(const Vec& a, const Vec& b, const Grid& grid) {
  const double dx = periodic_delta(a[0], b[0], grid.cell[0]);
  if (grid.dim == 1) return std::abs(dx);
  const double dy = periodic_delta(a[1], b[1], grid.cell[1]);
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace hjlab
