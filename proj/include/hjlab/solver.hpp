#pragma once

#include "hjlab/grid_field.hpp"
#include "hjlab/hamiltonian.hpp"

namespace hjlab {

/// Explicit-scheme parameters. sigma < 0 selects the automatic dissipation
/// 1.1 * sup |dH/dp_d| over the a-priori gradient box. dt_override > 0 forces
/// a step (still validated against the monotonicity bound).
struct SchemeConfig {
  double cfl = 0.4;
  std::array<double, 2> sigma{-1.0, -1.0};
  double T = 1.0;
  double dt_override = 0.0;
};

/// Resolved lattice and dissipation actually used by a run.
struct SchemeInfo {
  std::array<double, 2> sigma{};
  double dt = 0.0;
  int steps = 0;
};

/// Picks sigma and the time lattice for (H, psi, grid, cfg) without marching.
/// The step satisfies cfl * h_d >= dt * 2 * D * sigma_d on every axis, the
/// monotonicity condition of the update below.
SchemeInfo plan_scheme(const HamiltonianSpec& h, const InitialCondition& psi, const Grid& grid,
                       const SchemeConfig& cfg);

/// Monotone Lax-Friedrichs marching for dt g = H(grad g):
///   g_i^{n+1} = g_i^n + dt * [ H((D-g + D+g)/2) + sum_d sigma_d/2 (D+g_d - D-g_d) ]
/// The dissipation sign is pinned by the monotonicity property test, not by
/// convention (the equation has the nonstandard sign dt g - H(grad g) = 0).
SpaceTimeField solve_lax_friedrichs(const HamiltonianSpec& h, const InitialCondition& psi,
                                    const Grid& grid, const SchemeConfig& cfg,
                                    SchemeInfo* info = nullptr);

/// Exact pre-horizon solution by characteristic transport (1D):
/// foot points x_i map to y_i = x_i - t grad H(grad psi(x_i)) carrying
/// g(t, y_i) = psi(x_i) + t (H(grad psi) - grad psi . grad H(grad psi)),
/// resampled onto the grid by monotone piecewise-linear interpolation.
/// Throws HorizonExceeded when the image map stops being increasing.
Field solve_characteristic_exact(const HamiltonianSpec& h, const InitialCondition& psi,
                                 const Grid& grid, double t);

/// Stack of solve_characteristic_exact slices on the given lattice.
SpaceTimeField sample_characteristic_solution(const HamiltonianSpec& h,
                                              const InitialCondition& psi, const Grid& grid,
                                              const std::vector<double>& times);

/// Largest t (bisection to 1e-6 relative, capped) keeping the foot-point map
/// x - t grad H(grad psi(x)) strictly increasing across the grid (1D).
double classical_horizon(const HamiltonianSpec& h, const InitialCondition& psi, const Grid& grid,
                         double cap = 10.0);

}  // namespace hjlab
