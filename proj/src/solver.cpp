#include "hjlab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hjlab/error.hpp"
#include "hjlab/parallel.hpp"

namespace hjlab {

SchemeInfo plan_scheme(const HamiltonianSpec& h, const InitialCondition& psi, const Grid& grid,
                       const SchemeConfig& cfg) {
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0))
    throw Error(ErrorCode::CFLViolation, "cfl must lie in (0, 1]");
  if (!(cfg.T > 0.0)) throw Error(ErrorCode::BadSpec, "horizon T must be positive");

  SchemeInfo info;
  const double lip = lipschitz_estimate(sample(grid, psi.value));
  for (int d = 0; d < grid.dim; ++d) {
    info.sigma[d] =
        cfg.sigma[d] >= 0.0 ? cfg.sigma[d] : 1.1 * grad_component_sup(h, d, lip + 1.0);
  }

  double bound = std::min(cfg.T, cfg.cfl * grid.hmin());
  for (int d = 0; d < grid.dim; ++d)
    if (info.sigma[d] > 0.0)
      bound = std::min(bound, cfg.cfl * grid.h(d) / (2.0 * grid.dim * info.sigma[d]));

  double dt_raw = bound;
  if (cfg.dt_override > 0.0) {
    if (cfg.dt_override > bound * (1.0 + 1e-12))
      throw Error(ErrorCode::CFLViolation, "requested dt exceeds the monotone-scheme bound");
    dt_raw = cfg.dt_override;
  }
  info.steps = static_cast<int>(std::ceil(cfg.T / dt_raw - 1e-12));
  info.dt = cfg.T / info.steps;
  return info;
}

SpaceTimeField solve_lax_friedrichs(const HamiltonianSpec& h, const InitialCondition& psi,
                                    const Grid& grid, const SchemeConfig& cfg,
                                    SchemeInfo* info_out) {
  if (h.dim != grid.dim || psi.dim != grid.dim)
    throw Error(ErrorCode::GridMismatch, "dimension mismatch between H, psi and grid");
  const SchemeInfo info = plan_scheme(h, psi, grid, cfg);
  if (info_out) *info_out = info;

  SpaceTimeField out;
  out.grid = grid;
  out.times.resize(info.steps + 1);
  for (int k = 0; k <= info.steps; ++k) out.times[k] = k * info.dt;
  out.slices.reserve(info.steps + 1);
  out.slices.push_back(sample(grid, psi.value));

  const int n0 = grid.n[0];
  const int n1 = grid.dim == 2 ? grid.n[1] : 1;
  const double h0 = grid.h(0);
  const double h1 = grid.dim == 2 ? grid.h(1) : 1.0;

  Field cur = out.slices[0];
  Field next;
  next.grid = grid;
  next.v.resize(grid.size());

  for (int step = 0; step < info.steps; ++step) {
    parallel_for(n0, [&](std::int64_t lo, std::int64_t hi) {
      for (int i = int(lo); i < int(hi); ++i) {
        for (int j = 0; j < n1; ++j) {
          const double c = cur.at(i, j);
          const double dp0 = (cur.wrap(i + 1, j) - c) / h0;
          const double dm0 = (c - cur.wrap(i - 1, j)) / h0;
          Vec mid{0.5 * (dp0 + dm0), 0.0};
          double diss = 0.5 * info.sigma[0] * (dp0 - dm0);
          if (grid.dim == 2) {
            const double dp1 = (cur.wrap(i, j + 1) - c) / h1;
            const double dm1 = (c - cur.wrap(i, j - 1)) / h1;
            mid[1] = 0.5 * (dp1 + dm1);
            diss += 0.5 * info.sigma[1] * (dp1 - dm1);
          }
          next.at(i, j) = c + info.dt * (h.eval(mid) + diss);
        }
      }
    });
    std::swap(cur.v, next.v);
    for (double x : cur.v)
      if (!(std::abs(x) <= 1e12))
        throw Error(ErrorCode::Blowup, "solution magnitude exceeded 1e12 at step " +
                                           std::to_string(step + 1));
    out.slices.push_back(cur);
  }
  return out;
}

Field solve_characteristic_exact(const HamiltonianSpec& h, const InitialCondition& psi,
                                 const Grid& grid, double t) {
  if (grid.dim != 1)
    throw Error(ErrorCode::BadSpec, "characteristic-exact oracle is 1D only");
  const int n = grid.n[0];
  const double cell = grid.cell[0];

  std::vector<double> y(n), val(n);
  for (int i = 0; i < n; ++i) {
    const Vec x = grid.node(i);
    const Vec dpsi = psi.grad(x);
    const Vec w = h.grad(dpsi);
    y[i] = x[0] - t * w[0];
    val[i] = psi.value(x) + t * (h.eval(dpsi) - dot(dpsi, w));
  }
  for (int i = 0; i < n; ++i) {
    const double ynext = i + 1 < n ? y[i + 1] : y[0] + cell;
    if (!(ynext - y[i] > 0.0))
      throw Error(ErrorCode::HorizonExceeded,
                  "foot-point map not strictly increasing at t = " + std::to_string(t));
  }

  Field out;
  out.grid = grid;
  out.v.resize(n);
  for (int j = 0; j < n; ++j) {
    double u = grid.node(j)[0];
    u -= std::floor((u - y[0]) / cell) * cell;
    // locate segment y[i] <= u < y[i+1]
    const auto it = std::upper_bound(y.begin(), y.end(), u);
    const int i = static_cast<int>(it - y.begin()) - 1;
    const double y0 = y[i];
    const double y1 = i + 1 < n ? y[i + 1] : y[0] + cell;
    const double v0 = val[i];
    const double v1 = i + 1 < n ? val[i + 1] : val[0];
    const double th = (u - y0) / (y1 - y0);
    out.v[j] = v0 + th * (v1 - v0);
  }
  return out;
}

SpaceTimeField sample_characteristic_solution(const HamiltonianSpec& h,
                                              const InitialCondition& psi, const Grid& grid,
                                              const std::vector<double>& times) {
  SpaceTimeField out;
  out.grid = grid;
  out.times = times;
  out.slices.reserve(times.size());
  for (double t : times) out.slices.push_back(solve_characteristic_exact(h, psi, grid, t));
  out.validate();
  return out;
}

double classical_horizon(const HamiltonianSpec& h, const InitialCondition& psi, const Grid& grid,
                         double cap) {
  if (grid.dim != 1) throw Error(ErrorCode::BadSpec, "classical_horizon is 1D only");
  const int n = grid.n[0];
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = h.grad(psi.grad(grid.node(i)))[0];

  const double hx = grid.h(0);
  auto monotone = [&](double t) {
    for (int i = 0; i < n; ++i) {
      const double dw = w[(i + 1) % n] - w[i];
      if (!(hx - t * dw > 0.0)) return false;
    }
    return true;
  };
  if (monotone(cap)) return cap;
  double lo = 0.0, hi = cap;
  while (hi - lo > 1e-6 * std::max(hi, 1e-30)) {
    const double mid = 0.5 * (lo + hi);
    (monotone(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace hjlab
