#include "sphclif/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphclif {

namespace {

void check_points(std::span<const double> omega, std::span<const double> upsilon,
                  const KernelConfig& cfg) {
  if (static_cast<int>(omega.size()) != cfg.n ||
      static_cast<int>(upsilon.size()) != cfg.n) {
    throw std::invalid_argument("cauchy_kernel: point dimension mismatch");
  }
}

Multivector embed(std::span<const double> p, int n) {
  Multivector v(n);
  for (int i = 0; i < n; ++i) v[std::uint32_t{1} << i] = p[i];
  return v;
}

/// value = pref (Ca - (v w) Cb)
Multivector assemble_value(const KernelSeries& s, const Multivector& vw, int n) {
  return Multivector::scalar(n, s.prefactor * s.ca) - (s.prefactor * s.cb) * vw;
}

/// dPsi/dv_j = -w_j pref dCa - pref (e_j w) Cb + w_j pref (v w) dCb
Multivector assemble_partial(const KernelSeries& s, const Multivector& w,
                             const Multivector& vw, std::span<const double> omega,
                             int j, int n) {
  Multivector ejw = geometric_product(Multivector::basis_vector(n, j + 1), w);
  Multivector out = Multivector::scalar(n, -omega[j] * s.prefactor * s.dca);
  out -= (s.prefactor * s.cb) * ejw;
  out += (omega[j] * s.prefactor * s.dcb) * vw;
  return out;
}

}  // namespace

KernelSeries cauchy_kernel_series(std::span<const double> omega,
                                  std::span<const double> upsilon,
                                  const KernelConfig& cfg) {
  cfg.validate();
  check_points(omega, upsilon, cfg);
  double t = 0.0;
  for (int i = 0; i < cfg.n; ++i) t += omega[i] * upsilon[i];
  const double z = -t;
  if (1.0 + z < cfg.antipode_guard) {
    throw std::domain_error("cauchy_kernel: point pair inside the singular guard");
  }
  const Complex lambda(0.5 * cfg.n);
  KernelSeries s;
  s.z = z;
  GegenbauerResult ga = gegenbauer(cfg.alpha, lambda, s.z, cfg);
  GegenbauerResult gb = gegenbauer(cfg.alpha - Complex(1.0), lambda, s.z, cfg);
  if (ga.diverged || gb.diverged) {
    throw std::domain_error("cauchy_kernel: Gegenbauer series diverged");
  }
  s.ca = ga.value;
  s.cb = gb.value;
  s.dca = ga.dvalue;
  s.dcb = gb.dvalue;
  s.terms_used = std::max(ga.terms, gb.terms);
  s.converged = ga.converged && gb.converged;
  const Complex sin_pa = std::sin(Complex(std::numbers::pi) * cfg.alpha);
  s.prefactor = Complex(std::numbers::pi) / (sphere_area(cfg.n) * sin_pa);
  return s;
}

KernelValue cauchy_kernel(std::span<const double> omega,
                          std::span<const double> upsilon,
                          const KernelConfig& cfg) {
  const KernelSeries s = cauchy_kernel_series(omega, upsilon, cfg);
  const Multivector vw =
      geometric_product(embed(upsilon, cfg.n), embed(omega, cfg.n));
  return KernelValue{assemble_value(s, vw, cfg.n), s.terms_used, s.converged};
}

KernelValue cauchy_kernel_conjugate(std::span<const double> omega,
                                    std::span<const double> upsilon,
                                    const KernelConfig& cfg) {
  KernelConfig conj_cfg = cfg;
  conj_cfg.alpha = std::conj(cfg.alpha);
  // conj(Psi_alpha(v, w)) = Psi_{conj alpha}(w, v)
  return cauchy_kernel(omega, upsilon, conj_cfg);
}

KernelDz cauchy_kernel_dz(std::span<const double> omega,
                          std::span<const double> upsilon,
                          const KernelConfig& cfg) {
  const KernelSeries s = cauchy_kernel_series(omega, upsilon, cfg);
  const Multivector w = embed(omega, cfg.n);
  const Multivector vw = geometric_product(embed(upsilon, cfg.n), w);

  KernelDz out(cfg.n);
  out.terms_used = s.terms_used;
  out.converged = s.converged;
  out.dpsi_dz = Multivector::scalar(cfg.n, s.prefactor * s.dca) -
                (s.prefactor * s.dcb) * vw;
  out.dbivector.reserve(static_cast<std::size_t>(cfg.n));
  out.dpsi_dvj.reserve(static_cast<std::size_t>(cfg.n));
  for (int j = 0; j < cfg.n; ++j) {
    out.dbivector.push_back(
        geometric_product(Multivector::basis_vector(cfg.n, j + 1), w));
    out.dpsi_dvj.push_back(assemble_partial(s, w, vw, omega, j, cfg.n));
  }
  return out;
}

Multivector gamma_applied_kernel_general(std::span<const double> omega,
                                         std::span<const double> upsilon,
                                         const KernelConfig& kernel_cfg,
                                         double deriv_sign, Complex zeroth) {
  const KernelSeries s = cauchy_kernel_series(omega, upsilon, kernel_cfg);
  const int n = kernel_cfg.n;
  const Multivector w = embed(omega, n);
  const Multivector vw = geometric_product(embed(upsilon, n), w);

  Multivector acc = zeroth * assemble_value(s, vw, n);
  std::vector<Multivector> parts;
  parts.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) parts.push_back(assemble_partial(s, w, vw, omega, j, n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::uint32_t mask = (std::uint32_t{1} << i) | (std::uint32_t{1} << j);
      Multivector comb = upsilon[i] * parts[static_cast<std::size_t>(j)] -
                         upsilon[j] * parts[static_cast<std::size_t>(i)];
      acc += deriv_sign * geometric_product(Multivector::blade(n, mask), comb);
    }
  }
  return acc;
}

Multivector gamma_applied_kernel(std::span<const double> omega,
                                 std::span<const double> upsilon,
                                 const KernelConfig& cfg, GammaVariant variant) {
  if (variant == GammaVariant::plain) {
    return gamma_applied_kernel_general(omega, upsilon, cfg, -1.0, cfg.alpha);
  }
  return gamma_applied_kernel_general(omega, upsilon, cfg, +1.0, std::conj(cfg.alpha));
}

}  // namespace sphclif
