#pragma once

#include <functional>

#include "sphclif/geometry.hpp"
#include "sphclif/kernel.hpp"
#include "sphclif/operators.hpp"

namespace sphclif {

struct TransformConfig {
  KernelConfig kernel;
  /// Geodesic radius around the evaluation point (and its antipode)
  /// whose quadrature nodes are dropped.
  double exclusion_eps = 0.05;
  /// Symmetric arc exclusion for the principal-value boundary operator.
  double pv_eps = 0.05;
  /// Add the excluded ball's analytic mass back: the kernel's angular
  /// average over the geodesic disk is purely scalar (the bivector part
  /// averages out), so the dropped contribution is
  /// [2 pi int_0^eps scalar(Psi)(rho) sin(rho) drho] f(v), which turns
  /// the O(eps) exclusion bias into O(eps^2).
  bool ball_correction = true;
};

/// Teodorescu transform T_Omega f (v) = sum_w Psi(w, v) f(w) wt_w over
/// interior nodes outside the exclusion radius of v and of -v, plus the
/// ball correction when enabled (the field value at v is taken from the
/// nearest node unless supplied explicitly).
Multivector teodorescu(const SphericalDomain& dom, const SampledField& f,
                       Complex alpha, const SpherePoint& v, const TransformConfig& cfg);
Multivector teodorescu(const SphericalDomain& dom, const SampledField& f,
                       Complex alpha, const SpherePoint& v, const Multivector& f_at_v,
                       const TransformConfig& cfg);

/// Conjugated transform: integrates against the conjugate kernel
/// conj(Psi_alpha(v, w)) = Psi_{conj alpha}(w, v).
Multivector teodorescu_bar(const SphericalDomain& dom, const SampledField& f,
                           Complex alpha, const SpherePoint& v,
                           const TransformConfig& cfg);
Multivector teodorescu_bar(const SphericalDomain& dom, const SampledField& f,
                           Complex alpha, const SpherePoint& v,
                           const Multivector& f_at_v, const TransformConfig& cfg);

/// 2 pi int_0^eps scalar(Psi_alpha)(rho) sin(rho) drho: the analytic
/// mass of the excluded geodesic disk (Gauss-Legendre in rho).
Complex excluded_ball_mass(Complex alpha, double eps, const KernelConfig& kernel);

/// Cauchy (boundary) transform for v off the boundary:
///   F_bnd h (v) = sum_b Psi(w_b, v) (w_b n_b) h_b wt_b,
/// with w_b n_b the geometric product of the node position and the
/// outward co-normal (the Clifford-Stokes co-normal bivector). Returns 0
/// on a global domain. `h` is aligned with dom.boundary_nodes.
Multivector cauchy_boundary(const SphericalDomain& dom, const std::vector<Multivector>& h,
                            Complex alpha, const SpherePoint& v,
                            const TransformConfig& cfg);

/// As cauchy_boundary with the conjugated kernel.
Multivector cauchy_boundary_bar(const SphericalDomain& dom,
                                const std::vector<Multivector>& h, Complex alpha,
                                const SpherePoint& v, const TransformConfig& cfg);

/// Principal-value boundary operator at a boundary node:
///   2 * sum over boundary nodes outside the symmetric pv_eps arc.
Multivector singular_cauchy_boundary(const SphericalDomain& dom,
                                     const std::vector<Multivector>& h, Complex alpha,
                                     std::size_t boundary_index,
                                     const TransformConfig& cfg);

/// Composition of a first-order operator with the Teodorescu transform,
/// evaluated through analytic kernel derivatives plus the distributional
/// free term:
///
///   [Gamma_alpha T f](v)     = sum_w [Gamma_alpha Psi](w,v) f_w wt_w + chi(v) f(v)
///   [Gamma_bar_alpha T f](v) = sum_w [Gamma_bar_alpha Psi](w,v) f_w wt_w - chi(v) f(v)
///
/// The far-field sums are computed from cauchy_kernel_dz; for the exact
/// kernel the plain sum vanishes identically and the conjugated sum is
/// 2 Re(alpha) T f, so the free term carries the delta mass the excluded
/// ball removes. `f_at_v` supplies the field value at v (chi(v) = 1 only
/// when v lies in the domain).
Multivector gamma_of_teodorescu(const SphericalDomain& dom, const SampledField& f,
                                Complex alpha, const SpherePoint& v,
                                const Multivector& f_at_v, const TransformConfig& cfg,
                                GammaVariant variant);

/// The boundary transform with Gamma_alpha (plain) or its conjugate
/// applied at the off-boundary target through kernel derivatives. The
/// boundary kernel carries no distributional mass at interior targets,
/// so there is no free term; the plain variant measures the
/// monogenicity of the Cauchy transform.
Multivector gamma_of_cauchy_boundary(const SphericalDomain& dom,
                                     const std::vector<Multivector>& h, Complex alpha,
                                     const SpherePoint& v, const TransformConfig& cfg,
                                     GammaVariant variant);

/// Same composition against the conjugate kernel (the transform behind
/// pi_bar's boundary corrections): operator Gamma_alpha or its
/// conjugate, kernel at conj(alpha).
Multivector gamma_of_cauchy_boundary_bar(const SphericalDomain& dom,
                                         const std::vector<Multivector>& h, Complex alpha,
                                         const SpherePoint& v, const TransformConfig& cfg,
                                         GammaVariant variant);

/// Gamma_alpha (or its conjugate) of an arbitrary potential via a local
/// least-squares quadratic fit over M ring samples of radius R around v.
/// Independent of the kernel-derivative route; used as its cross-check
/// and wherever an honest derivative of a computed potential is needed.
Multivector ring_fit_gamma(const std::function<Multivector(const SpherePoint&)>& potential,
                           const SpherePoint& v, Complex alpha, double radius, int m_samples,
                           GammaVariant variant);

/// Plain central finite difference of a smooth potential (no
/// singularity near v), assembled into Gamma_alpha or its conjugate.
Multivector fd_gamma(const std::function<Multivector(const SpherePoint&)>& potential,
                     const SpherePoint& v, Complex alpha, double step,
                     GammaVariant variant);

/// max over `samples` of |f - F_bnd(tr f) - T (Gamma_alpha f)| / (1 + |f|).
double borel_pompeiu_residual(const SphericalDomain& dom, const AnalyticField& f,
                              Complex alpha, const std::vector<SpherePoint>& samples,
                              const TransformConfig& cfg);

/// Builds g = F_bnd h from boundary data, re-traces it (boundary nodes
/// inset by `trace_inset` toward the interior), and measures
/// max |g - F_bnd(tr g)| / (1 + |g|) over the samples.
double cif_residual(const SphericalDomain& dom, const std::vector<Multivector>& h,
                    Complex alpha, const std::vector<SpherePoint>& samples,
                    const TransformConfig& cfg, double trace_inset);

}  // namespace sphclif
