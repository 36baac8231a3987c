#pragma once

#include "sphclif/pi_operator.hpp"

namespace sphclif {

/// Monogenic seed built as the Cauchy transform of boundary data: value
/// and exact ambient partials both come from the boundary quadrature
/// (the partials through the analytic kernel derivatives). Lies in
/// ker Gamma_alpha up to the kernel's series defect.
AnalyticField cif_monogenic_field(const SphericalDomain& dom,
                                  const std::vector<Multivector>& h, Complex alpha,
                                  const TransformConfig& cfg);

struct BvpSolution {
  SampledField f;
  double gamma_residual = 0.0;  ///< |Gamma_alpha f - g| at interior samples (ring fit)
  double trace_residual = 0.0;  ///< |f - h| near the boundary
};

/// Inhomogeneous boundary value problem Gamma_alpha f = g on Omega,
/// tr f = h on the boundary; the solution is f = F_bnd h + T_Omega g.
BvpSolution solve_bvp(const SphericalDomain& dom, const AnalyticField& g,
                      const std::vector<Multivector>& h, Complex alpha,
                      const TransformConfig& cfg);

struct BeltramiConfig {
  AnalyticField q;        ///< dilatation, sup |q|_Cl < 1 over the nodes
  AnalyticField phi;      ///< ker Gamma_alpha seed
  Complex alpha{0.02, 0.65};
  double fp_tol = 1e-10;  ///< stop when |h_{m+1}-h_m| <= fp_tol * |h_1-h_0|
  int max_iter = 60;
  TransformConfig transform;
  /// Kernel cache budget for the dense N x N sweep (bytes); above it the
  /// kernels are recomputed per iteration.
  std::size_t cache_budget = std::size_t{512} << 20;
};

struct SolveTrace {
  std::vector<double> increments;  ///< |h_{m+1} - h_m| per iteration
  double mean_ratio = 0.0;         ///< geometric mean of increment ratios, iters 3..end
  double be1_residual = 0.0;       ///< |Gamma_alpha f - q Gamma_bar_alpha f| (ring fit)
  double be2_residual = 0.0;       ///< fixed-point equation defect on the nodes
  bool converged = false;
  int iterations = 0;
};

struct BeltramiSolution {
  SampledField f;
  SampledField h;  ///< the fixed point h = Gamma_alpha f
  SolveTrace trace;
};

/// Fixed-point solver for the spherical Beltrami equation
/// Gamma_alpha f = q Gamma_bar_alpha f: iterates
///   h_{m+1}(v) = q(v) (pi h_m (v) + Gamma_bar_alpha phi (v))
/// from h_0 = 0, then f = T h_* + phi. Throws std::runtime_error when
/// the increment ratio exceeds 1 for three consecutive steps.
BeltramiSolution solve_beltrami(const SphericalDomain& dom, const BeltramiConfig& cfg);

}  // namespace sphclif
