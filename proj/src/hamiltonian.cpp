#include "hjlab/hamiltonian.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "hjlab/error.hpp"

namespace hjlab {

namespace {

double base_eval(const HamiltonianSpec& h, const Vec& p) {
  switch (h.family) {
    case HamiltonianFamily::Quadratic:
      return h.quad_a * dot(p, p) + dot(h.quad_b, p) + h.quad_c0;
    case HamiltonianFamily::NegSquare:
      return -dot(p, p);
    case HamiltonianFamily::Cosine:
      return h.cos_amp * std::cos(h.cos_freq * p[0]);
    case HamiltonianFamily::Custom:
      return h.custom_value(p);
  }
  return 0.0;
}

Vec base_grad(const HamiltonianSpec& h, const Vec& p) {
  switch (h.family) {
    case HamiltonianFamily::Quadratic:
      return (2.0 * h.quad_a) * p + h.quad_b;
    case HamiltonianFamily::NegSquare:
      return -2.0 * p;
    case HamiltonianFamily::Cosine:
      return {-h.cos_amp * h.cos_freq * std::sin(h.cos_freq * p[0]), 0.0};
    case HamiltonianFamily::Custom:
      return h.custom_grad(p);
  }
  return {};
}

SymMat base_hess(const HamiltonianSpec& h, const Vec& p) {
  switch (h.family) {
    case HamiltonianFamily::Quadratic:
      return {2.0 * h.quad_a, 0.0, h.dim == 2 ? 2.0 * h.quad_a : 0.0};
    case HamiltonianFamily::NegSquare:
      return {-2.0, 0.0, h.dim == 2 ? -2.0 : 0.0};
    case HamiltonianFamily::Cosine:
      return {-h.cos_amp * h.cos_freq * h.cos_freq * std::cos(h.cos_freq * p[0]), 0.0, 0.0};
    case HamiltonianFamily::Custom:
      return h.custom_hess(p);
  }
  return {};
}

std::vector<double> split_params(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadSpec, "bad numeric parameter '" + tok + "'");
    }
  }
  return out;
}

constexpr double kInflation = 0.10;
constexpr int kScan1D = 10000;
constexpr int kScan2D = 300;

}  // namespace

double HamiltonianSpec::eval(const Vec& p) const {
  return base_eval(*this, p) - sub_const - dot(sub_lin, p);
}

Vec HamiltonianSpec::grad(const Vec& p) const { return base_grad(*this, p) - sub_lin; }

SymMat HamiltonianSpec::hess(const Vec& p) const { return base_hess(*this, p); }

HamiltonianSpec HamiltonianSpec::quadratic(double a, const Vec& b, double c0, int dim) {
  HamiltonianSpec h;
  h.family = HamiltonianFamily::Quadratic;
  h.dim = dim;
  h.quad_a = a;
  h.quad_b = b;
  h.quad_c0 = c0;
  std::ostringstream os;
  os << "quadratic:" << a << "," << b[0];
  if (dim == 2) os << "," << b[1];
  os << "," << c0;
  h.spec_string = os.str();
  return h;
}

HamiltonianSpec HamiltonianSpec::neg_square(int dim) {
  HamiltonianSpec h;
  h.family = HamiltonianFamily::NegSquare;
  h.dim = dim;
  h.spec_string = "negsquare";
  return h;
}

HamiltonianSpec HamiltonianSpec::cosine(double amp, double freq, int dim) {
  HamiltonianSpec h;
  h.family = HamiltonianFamily::Cosine;
  h.dim = dim;
  h.cos_amp = amp;
  h.cos_freq = freq;
  std::ostringstream os;
  os << "cosine:" << amp << "," << freq;
  h.spec_string = os.str();
  return h;
}

HamiltonianSpec HamiltonianSpec::custom(std::function<double(const Vec&)> value,
                                        std::function<Vec(const Vec&)> grad,
                                        std::function<SymMat(const Vec&)> hess, int dim,
                                        std::string name) {
  HamiltonianSpec h;
  h.family = HamiltonianFamily::Custom;
  h.dim = dim;
  h.custom_value = std::move(value);
  h.custom_grad = std::move(grad);
  h.custom_hess = std::move(hess);
  h.spec_string = std::move(name);
  return h;
}

HessSup hess_opnorm_sup(const HamiltonianSpec& h, double radius) {
  double sup = 0.0;
  if (radius <= 0.0) {
    sup = h.hess(Vec{}).opnorm(h.dim);
  } else if (h.dim == 1) {
    const double step = 2.0 * radius / (kScan1D - 1);
    for (int i = 0; i < kScan1D; ++i) {
      const double p = -radius + i * step;
      sup = std::max(sup, h.hess(vec1(p)).opnorm(1));
    }
  } else {
    const double step = 2.0 * radius / (kScan2D - 1);
    const double r2 = radius * radius;
    for (int i = 0; i < kScan2D; ++i) {
      for (int j = 0; j < kScan2D; ++j) {
        const Vec p{-radius + i * step, -radius + j * step};
        if (dot(p, p) > r2) continue;
        sup = std::max(sup, h.hess(p).opnorm(2));
      }
    }
  }
  return {sup, sup * (1.0 + kInflation)};
}

double grad_component_sup(const HamiltonianSpec& h, int axis, double radius) {
  double sup = 0.0;
  if (radius <= 0.0) return std::abs(h.grad(Vec{})[axis]);
  if (h.dim == 1) {
    const double step = 2.0 * radius / (kScan1D - 1);
    for (int i = 0; i < kScan1D; ++i)
      sup = std::max(sup, std::abs(h.grad(vec1(-radius + i * step))[axis]));
  } else {
    const double step = 2.0 * radius / (kScan2D - 1);
    for (int i = 0; i < kScan2D; ++i)
      for (int j = 0; j < kScan2D; ++j)
        sup = std::max(sup, std::abs(h.grad(Vec{-radius + i * step, -radius + j * step})[axis]));
  }
  return sup;
}

double quadratic_remainder_constant(const HamiltonianSpec& h, double ell) {
  const double h0 = h.eval(Vec{});
  const double g0 = norm(h.grad(Vec{}));
  if (std::abs(h0) > 1e-10 || g0 > 1e-10)
    throw Error(ErrorCode::NotNormalized,
                "H(0) and grad H(0) must vanish; apply normalize first");
  return 0.5 * hess_opnorm_sup(h, ell).inflated;
}

HamiltonianSpec normalize(const HamiltonianSpec& h) {
  HamiltonianSpec out = h;
  if (h.family == HamiltonianFamily::Quadratic) {
    // closed under removing the affine part
    out = HamiltonianSpec::quadratic(h.quad_a, Vec{}, 0.0, h.dim);
    return out;
  }
  out.sub_const += h.eval(Vec{});
  out.sub_lin = out.sub_lin + h.grad(Vec{});
  out.spec_string = "normalize(" + h.spec_string + ")";
  return out;
}

std::pair<HamiltonianSpec, InitialCondition> reflect(const HamiltonianSpec& h,
                                                     const InitialCondition& psi) {
  HamiltonianSpec rh;
  switch (h.family) {
    case HamiltonianFamily::Quadratic:
      rh = HamiltonianSpec::quadratic(-h.quad_a, h.quad_b, -h.quad_c0, h.dim);
      break;
    case HamiltonianFamily::NegSquare:
      rh = HamiltonianSpec::quadratic(1.0, Vec{}, 0.0, h.dim);
      break;
    case HamiltonianFamily::Cosine:
      rh = HamiltonianSpec::cosine(-h.cos_amp, h.cos_freq, h.dim);
      break;
    case HamiltonianFamily::Custom: {
      auto v = h.custom_value;
      auto g = h.custom_grad;
      auto hs = h.custom_hess;
      rh = HamiltonianSpec::custom([v](const Vec& p) { return -v(-p); },
                                   [g](const Vec& p) { return g(-p); },
                                   [hs](const Vec& p) {
                                     SymMat m = hs(-p);
                                     return SymMat{-m.xx, -m.xy, -m.yy};
                                   },
                                   h.dim, "reflect(" + h.spec_string + ")");
      break;
    }
  }
  // H(p) = B(p) - s - l.p  =>  -H(-p) = (-B(-p)) - (-s) - l.p
  rh.sub_const = -h.sub_const;
  rh.sub_lin = h.sub_lin;

  InitialCondition rpsi = psi;
  auto v = psi.value;
  auto g = psi.grad;
  rpsi.value = [v](const Vec& x) { return -v(x); };
  rpsi.grad = [g](const Vec& x) { return -g(x); };
  rpsi.spec_string = "neg(" + psi.spec_string + ")";
  return {rh, rpsi};
}

HamiltonianSpec parse_hamiltonian(const std::string& spec, int dim) {
  if (dim != 1 && dim != 2) throw Error(ErrorCode::BadSpec, "dimension must be 1 or 2");
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::vector<double> par =
      colon == std::string::npos ? std::vector<double>{} : split_params(spec.substr(colon + 1));

  if (name == "quadratic") {
    const size_t want = static_cast<size_t>(dim) + 2;
    if (par.size() != want)
      throw Error(ErrorCode::BadSpec, "quadratic needs a,b…,c0 (" + std::to_string(want) +
                                          " parameters in " + std::to_string(dim) + "D)");
    Vec b{par[1], dim == 2 ? par[2] : 0.0};
    return HamiltonianSpec::quadratic(par[0], b, par.back(), dim);
  }
  if (name == "negsquare") {
    if (!par.empty()) throw Error(ErrorCode::BadSpec, "negsquare takes no parameters");
    return HamiltonianSpec::neg_square(dim);
  }
  if (name == "cosine") {
    if (par.size() != 2) throw Error(ErrorCode::BadSpec, "cosine needs A,k");
    return HamiltonianSpec::cosine(par[0], par[1], dim);
  }
  throw Error(ErrorCode::BadSpec, "unknown hamiltonian family '" + name + "'");
}

InitialCondition parse_initial_condition(const std::string& spec, int dim, double cell) {
  if (dim != 1 && dim != 2) throw Error(ErrorCode::BadSpec, "dimension must be 1 or 2");
  InitialCondition ic;
  ic.dim = dim;
  ic.cell = {cell, dim == 2 ? cell : 0.0};
  ic.spec_string = spec;
  const double k0 = 2.0 * M_PI / cell;

  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::vector<double> par =
      colon == std::string::npos ? std::vector<double>{} : split_params(spec.substr(colon + 1));

  if (name == "zero") {
    ic.value = [](const Vec&) { return 0.0; };
    ic.grad = [](const Vec&) { return Vec{}; };
    ic.lip_value = 0.0;
    ic.lip_grad = 0.0;
    return ic;
  }
  if (name == "cos") {
    if (par.size() != 2) throw Error(ErrorCode::BadSpec, "cos needs A,m");
    const double amp = par[0], k = par[1] * k0;
    ic.value = [amp, k](const Vec& x) { return amp * std::cos(k * x[0]); };
    ic.grad = [amp, k](const Vec& x) { return Vec{-amp * k * std::sin(k * x[0]), 0.0}; };
    ic.lip_value = std::abs(amp * k);
    ic.lip_grad = std::abs(amp * k * k);
    return ic;
  }
  if (name == "trig") {
    if (par.empty() || par.size() > 8)
      throw Error(ErrorCode::BadSpec, "trig needs 1..8 mode amplitudes");
    auto amps = par;
    ic.value = [amps, k0](const Vec& x) {
      double s = 0.0;
      for (size_t m = 0; m < amps.size(); ++m) s += amps[m] * std::sin((m + 1) * k0 * x[0]);
      return s;
    };
    ic.grad = [amps, k0](const Vec& x) {
      double s = 0.0;
      for (size_t m = 0; m < amps.size(); ++m)
        s += amps[m] * (m + 1) * k0 * std::cos((m + 1) * k0 * x[0]);
      return Vec{s, 0.0};
    };
    double lv = 0.0, lg = 0.0;
    for (size_t m = 0; m < amps.size(); ++m) {
      lv += std::abs(amps[m]) * (m + 1) * k0;
      lg += std::abs(amps[m]) * (m + 1) * k0 * (m + 1) * k0;
    }
    ic.lip_value = lv;
    ic.lip_grad = lg;
    return ic;
  }
  throw Error(ErrorCode::BadSpec, "unknown initial condition family '" + name + "'");
}

}  // namespace hjlab
