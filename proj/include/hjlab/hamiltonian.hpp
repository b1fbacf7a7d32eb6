#pragma once

#include <functional>
#include <string>
#include <utility>

#include "hjlab/vec.hpp"

namespace hjlab {

enum class HamiltonianFamily { Quadratic, NegSquare, Cosine, Custom };

/// The C^2 nonlinearity H of the equation dt g = H(grad g), as an immutable
/// bundle of value/gradient/Hessian rules. Builtin families:
///   quadratic  H(p) = a|p|^2 + b.p + c0
///   negsquare  H(p) = -|p|^2
///   cosine     H(p) = A cos(k p_1)   (nonconvex)
/// plus user-supplied Custom rules. An affine correction (sub_const, sub_lin)
/// carries the result of normalize() for families that are not closed under
/// subtracting their own affine part.
struct HamiltonianSpec {
  HamiltonianFamily family = HamiltonianFamily::Quadratic;
  int dim = 1;

  double quad_a = 0.0;
  Vec quad_b{};
  double quad_c0 = 0.0;
  double cos_amp = 0.0;
  double cos_freq = 0.0;
  std::function<double(const Vec&)> custom_value;
  std::function<Vec(const Vec&)> custom_grad;
  std::function<SymMat(const Vec&)> custom_hess;

  double sub_const = 0.0;
  Vec sub_lin{};

  std::string spec_string;

  double eval(const Vec& p) const;
  Vec grad(const Vec& p) const;
  SymMat hess(const Vec& p) const;

  double eval1(double p) const { return eval(vec1(p)); }
  double grad1(double p) const { return grad(vec1(p))[0]; }

  static HamiltonianSpec quadratic(double a, const Vec& b, double c0, int dim = 1);
  static HamiltonianSpec neg_square(int dim = 1);
  static HamiltonianSpec cosine(double amp, double freq, int dim = 1);
  static HamiltonianSpec custom(std::function<double(const Vec&)> value,
                                std::function<Vec(const Vec&)> grad,
                                std::function<SymMat(const Vec&)> hess, int dim = 1,
                                std::string name = "custom");
};

/// Initial condition psi: Lipschitz with Lipschitz gradient, periodic over
/// the declared cell.
struct InitialCondition {
  int dim = 1;
  std::array<double, 2> cell{};
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> grad;
  double lip_value = 0.0;
  double lip_grad = 0.0;
  std::string spec_string;

  double value1(double x) const { return value(vec1(x)); }
  double grad1(double x) const { return grad(vec1(x))[0]; }
};

/// sup of |hess H|_op over the ball |r| <= radius, by dense scan
/// (1D: 1e4 points, 2D: 300x300 bounding box masked to the ball).
/// `inflated` carries the raw sup with a +10% safety margin.
struct HessSup {
  double raw = 0.0;
  double inflated = 0.0;
};
HessSup hess_opnorm_sup(const HamiltonianSpec& h, double radius);

/// sup of |d H / d p_axis| over the box |p|_inf <= radius, same scan density.
double grad_component_sup(const HamiltonianSpec& h, int axis, double radius);

/// Taylor constant c(ell) with |H(p)| <= c(ell)|p|^2 on |p| <= ell, valid for
/// normalized H (H(0)=0, grad H(0)=0, checked to 1e-10; throws NotNormalized).
/// Returns the inflated 0.5 * hess_opnorm_sup(h, ell).
double quadratic_remainder_constant(const HamiltonianSpec& h, double ell);

/// H~(p) = H(p) - H(0) - grad H(0).p, so H~(0)=0 and grad H~(0)=0 exactly.
HamiltonianSpec normalize(const HamiltonianSpec& h);

/// The reflected pair (p -> -H(-p), -psi); an involution at the level of
/// evaluation rules.
std::pair<HamiltonianSpec, InitialCondition> reflect(const HamiltonianSpec& h,
                                                     const InitialCondition& psi);

/// Parses a CLI family spec, e.g. "quadratic:0.5,0,0", "negsquare",
/// "cosine:1,1". Quadratic in 2D takes a,bx,by,c0.
HamiltonianSpec parse_hamiltonian(const std::string& spec, int dim = 1);

/// Parses "zero", "cos:A,m" (A cos(2 pi m x / cell)) or "trig:a1,a2,a3"
/// (sum of a_j sin(2 pi j x / cell)) over the given cell.
InitialCondition parse_initial_condition(const std::string& spec, int dim = 1,
                                         double cell = 6.283185307179586476925286766559);

}  // namespace hjlab
