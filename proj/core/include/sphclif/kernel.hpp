#pragma once

#include <span>
#include <vector>

#include "sphclif/gegenbauer.hpp"
#include "sphclif/multivector.hpp"

namespace sphclif {

/// Cauchy kernel value: grades {0, 2} only.
struct KernelValue {
  Multivector value;
  int terms_used = 0;
  bool converged = false;
};

/// Evaluation of the two Gegenbauer series the kernel is built from,
/// shared by the kernel, its conjugate and its derivatives.
struct KernelSeries {
  Complex prefactor{0.0};  ///< pi / (sigma_{n-1} sin(pi alpha))
  Complex z{0.0};          ///< series variable: the negative inner product -sum w_i v_i
  Complex ca{0.0}, cb{0.0};    ///< C_alpha^{n/2}(z), C_{alpha-1}^{n/2}(z)
  Complex dca{0.0}, dcb{0.0};  ///< their z-derivatives
  int terms_used = 0;
  bool converged = false;
};

/// Both Gegenbauer series of the kernel at a point pair, with derivatives.
/// Throws std::domain_error when 1 + z falls below cfg.antipode_guard
/// (the series argument (1-z)/2 reaches its divergence point there).
KernelSeries cauchy_kernel_series(std::span<const double> omega,
                                  std::span<const double> upsilon,
                                  const KernelConfig& cfg);

/// Cauchy kernel of the spherical Dirac operator Gamma_alpha on S^{n-1}:
///
///   Psi_alpha(w, v) = pi / (sigma_{n-1} sin(pi alpha))
///                     * ( C_alpha^{n/2}(z) - (v w) C_{alpha-1}^{n/2}(z) ),
///
/// z = -w.v (the algebra's negative inner product), (v w) the geometric
/// product with the target point v on the left. Gamma_alpha applied at v
/// annihilates it away from w = v, which is where its singularity sits.
///
/// `omega` is the integration (source) point, `upsilon` the target.
KernelValue cauchy_kernel(std::span<const double> omega,
                          std::span<const double> upsilon,
                          const KernelConfig& cfg);

/// Conjugate kernel conj(Psi_alpha(v, w)); equals the alpha-conjugated
/// kernel Psi_{conj(alpha)}(w, v), which is what the conjugated
/// transforms integrate against.
KernelValue cauchy_kernel_conjugate(std::span<const double> omega,
                                    std::span<const double> upsilon,
                                    const KernelConfig& cfg);

/// Analytic target-derivatives of the kernel.
struct KernelDz {
  explicit KernelDz(int n) : dpsi_dz(n) {}

  Multivector dpsi_dz;                    ///< prefactor * (dCa - (v w) dCb), the z-derivative
  std::vector<Multivector> dbivector;     ///< d(v w)/dv_j = e_j w, one entry per component
  std::vector<Multivector> dpsi_dvj;      ///< assembled ambient partials dPsi/dv_j
  int terms_used = 0;
  bool converged = false;
};

/// Term-wise derivative of both Gegenbauer series plus the bivector
/// factor's partials, assembled into exact ambient partials
///   dPsi/dv_j = -w_j * pref * dCa - pref * (e_j w) Cb + w_j * pref * (v w) dCb.
KernelDz cauchy_kernel_dz(std::span<const double> omega,
                          std::span<const double> upsilon,
                          const KernelConfig& cfg);

enum class GammaVariant { plain, conjugated };

/// The kernel with the spherical Dirac operator applied analytically at
/// the target point: [Gamma_alpha Psi](w, v) for `plain` (zero away from
/// the diagonal, up to series truncation) or [Gamma_bar_alpha Psi](w, v)
/// for `conjugated` (equal to 2 Re(alpha) Psi(w, v)). Both are assembled
/// from the analytic kernel derivatives, not from those identities.
Multivector gamma_applied_kernel(std::span<const double> omega,
                                 std::span<const double> upsilon,
                                 const KernelConfig& cfg, GammaVariant variant);

/// General first-order operator applied to the kernel at the target:
///   deriv_sign * sum_{i<j} e_ij (v_i dPsi/dv_j - v_j dPsi/dv_i) + zeroth * Psi.
/// deriv_sign = -1 with zeroth = alpha is Gamma_alpha; deriv_sign = +1
/// with zeroth = conj(alpha) is the conjugated operator. The Gegenbauer
/// series are evaluated once.
Multivector gamma_applied_kernel_general(std::span<const double> omega,
                                         std::span<const double> upsilon,
                                         const KernelConfig& kernel_cfg,
                                         double deriv_sign, Complex zeroth);

}  // namespace sphclif
